//! Finite and eventually periodic words over an arbitrary letter type,
//! kept in canonical form: the period is primitive and the last letter of
//! the preperiod differs from the last letter of the period, so structural
//! equality coincides with equality of infinite words.

use crate::error::{Error, Result};
use std::fmt;

/// A finite digit word.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteWord(pub Vec<i64>);

impl fmt::Display for FiniteWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|d| d.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// An eventually periodic infinite word u v^omega in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EvWord<L> {
    preperiod: Vec<L>,
    period: Vec<L>,
}

pub type EventuallyPeriodicWord = EvWord<i64>;
pub type PairWord = EvWord<(i64, i64)>;

/// Length of the primitive root of `v` via the KMP failure function.
fn primitive_root_len<L: Eq>(v: &[L]) -> usize {
    let n = v.len();
    if n <= 1 {
        return n;
    }
    let mut fail = vec![0usize; n];
    let mut k = 0;
    for i in 1..n {
        while k > 0 && v[i] != v[k] {
            k = fail[k - 1];
        }
        if v[i] == v[k] {
            k += 1;
        }
        fail[i] = k;
    }
    let root = n - fail[n - 1];
    if n % root == 0 {
        root
    } else {
        n
    }
}

impl<L: Clone + Eq> EvWord<L> {
    /// Builds the word u v^omega and canonicalizes it. The period must be
    /// nonempty.
    pub fn new(preperiod: Vec<L>, period: Vec<L>) -> Self {
        assert!(!period.is_empty(), "period must be nonempty");
        let mut w = EvWord { preperiod, period };
        w.canonicalize();
        w
    }

    /// Purely periodic word v^omega.
    pub fn periodic(period: Vec<L>) -> Self {
        Self::new(Vec::new(), period)
    }

    fn canonicalize(&mut self) {
        let root = primitive_root_len(&self.period);
        self.period.truncate(root);
        // Roll shared trailing letters of the preperiod into the period.
        while let Some(last) = self.preperiod.last() {
            if *last == *self.period.last().expect("nonempty period") {
                let l = self.period.pop().expect("nonempty period");
                self.period.insert(0, l);
                self.preperiod.pop();
            } else {
                break;
            }
        }
    }

    pub fn preperiod(&self) -> &[L] {
        &self.preperiod
    }

    pub fn period(&self) -> &[L] {
        &self.period
    }

    /// Letter at position n of the infinite word.
    pub fn letter(&self, n: usize) -> &L {
        if n < self.preperiod.len() {
            &self.preperiod[n]
        } else {
            &self.period[(n - self.preperiod.len()) % self.period.len()]
        }
    }

    pub fn prefix(&self, len: usize) -> Vec<L> {
        (0..len).map(|n| self.letter(n).clone()).collect()
    }

    /// The shifted word a_n a_{n+1} ... in canonical form.
    pub fn shift(&self, n: usize) -> Self {
        if n <= self.preperiod.len() {
            Self::new(self.preperiod[n..].to_vec(), self.period.clone())
        } else {
            let k = (n - self.preperiod.len()) % self.period.len();
            let mut period = self.period[k..].to_vec();
            period.extend_from_slice(&self.period[..k]);
            Self::new(Vec::new(), period)
        }
    }

    /// A non-canonical rewriting that moves the first period letter into the
    /// preperiod: u v0 (v1 ... v_{k-1} v0)^omega. Used by automaton
    /// constructions that require a nonzero preperiod.
    pub fn unrolled_once(&self) -> (Vec<L>, Vec<L>) {
        let mut pre = self.preperiod.clone();
        pre.push(self.period[0].clone());
        let mut per = self.period[1..].to_vec();
        per.push(self.period[0].clone());
        (pre, per)
    }

    /// Letterwise pairing; the preperiod is the longer of the two, the
    /// period the lcm of the two.
    pub fn zip<M: Clone + Eq>(&self, other: &EvWord<M>) -> EvWord<(L, M)> {
        let pre = self.preperiod.len().max(other.preperiod.len());
        let per = num_integer::lcm(self.period.len(), other.period.len());
        let letters: Vec<(L, M)> = (0..pre + per)
            .map(|n| (self.letter(n).clone(), other.letter(n).clone()))
            .collect();
        EvWord::new(letters[..pre].to_vec(), letters[pre..].to_vec())
    }
}

impl<A: Clone + Eq, B: Clone + Eq> EvWord<(A, B)> {
    /// Inverse of `zip`.
    pub fn project(&self) -> (EvWord<A>, EvWord<B>) {
        let left = EvWord::new(
            self.preperiod.iter().map(|(a, _)| a.clone()).collect(),
            self.period.iter().map(|(a, _)| a.clone()).collect(),
        );
        let right = EvWord::new(
            self.preperiod.iter().map(|(_, b)| b.clone()).collect(),
            self.period.iter().map(|(_, b)| b.clone()).collect(),
        );
        (left, right)
    }
}

impl<L: Clone + Ord> EvWord<L> {
    /// Strict lexicographic comparison of infinite words. Distinct canonical
    /// words differ within the preperiod lengths plus one period lcm.
    pub fn lex_less(&self, other: &Self) -> bool {
        let window = self.preperiod.len().max(other.preperiod.len())
            + num_integer::lcm(self.period.len(), other.period.len());
        for n in 0..window {
            match self.letter(n).cmp(other.letter(n)) {
                std::cmp::Ordering::Less => return true,
                std::cmp::Ordering::Greater => return false,
                std::cmp::Ordering::Equal => {}
            }
        }
        false
    }
}

impl EventuallyPeriodicWord {
    /// Parses the text syntax "2 0 1 (0)"; the parenthesized period is
    /// required.
    pub fn parse(s: &str) -> Result<Self> {
        let (pre, per) = parse_letters(s, |tok| {
            tok.parse::<i64>()
                .map_err(|_| Error::InvalidInput(format!("bad digit {tok:?}")))
        })?;
        if per.is_empty() {
            return Err(Error::InvalidInput(
                "word needs a parenthesized period, e.g. \"2 0 1 (0)\"".into(),
            ));
        }
        Ok(Self::new(pre, per))
    }
}

impl PairWord {
    /// Parses pair-letter syntax "1:0 (-1:0 0:0)".
    pub fn parse(s: &str) -> Result<Self> {
        let (pre, per) = parse_letters(s, |tok| {
            let (a, b) = tok
                .split_once(':')
                .ok_or_else(|| Error::InvalidInput(format!("bad pair letter {tok:?}")))?;
            let a = a
                .parse::<i64>()
                .map_err(|_| Error::InvalidInput(format!("bad pair letter {tok:?}")))?;
            let b = b
                .parse::<i64>()
                .map_err(|_| Error::InvalidInput(format!("bad pair letter {tok:?}")))?;
            Ok((a, b))
        })?;
        if per.is_empty() {
            return Err(Error::InvalidInput(
                "pair word needs a parenthesized period".into(),
            ));
        }
        Ok(Self::new(pre, per))
    }
}

fn parse_letters<L>(s: &str, parse: impl Fn(&str) -> Result<L>) -> Result<(Vec<L>, Vec<L>)> {
    let s = s.trim();
    let (pre_str, per_str) = match s.find('(') {
        Some(open) => {
            let close = s
                .rfind(')')
                .ok_or_else(|| Error::InvalidInput("unclosed period parenthesis".into()))?;
            if close < open || !s[close + 1..].trim().is_empty() {
                return Err(Error::InvalidInput("malformed period parenthesis".into()));
            }
            (&s[..open], &s[open + 1..close])
        }
        None => (s, ""),
    };
    let mut pre = Vec::new();
    for tok in pre_str.split_whitespace() {
        pre.push(parse(tok)?);
    }
    let mut per = Vec::new();
    for tok in per_str.split_whitespace() {
        per.push(parse(tok)?);
    }
    Ok((pre, per))
}

impl fmt::Display for EventuallyPeriodicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_word(f, self.preperiod(), self.period(), |d| d.to_string())
    }
}

impl fmt::Display for PairWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_word(f, self.preperiod(), self.period(), |(a, b)| {
            format!("{a}:{b}")
        })
    }
}

fn write_word<L>(
    f: &mut fmt::Formatter<'_>,
    pre: &[L],
    per: &[L],
    show: impl Fn(&L) -> String,
) -> fmt::Result {
    let mut parts: Vec<String> = pre.iter().map(&show).collect();
    let per_parts: Vec<String> = per.iter().map(&show).collect();
    parts.push(format!("({})", per_parts.join(" ")));
    write!(f, "{}", parts.join(" "))
}
