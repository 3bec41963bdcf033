use std::fmt;

use crate::error::{Error, Result};

/// A Young diagram: weakly decreasing positive parts.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        parts.retain(|&p| p > 0);
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Domain(format!("parts {parts:?} are not weakly decreasing")));
        }
        Ok(Self(parts))
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn conjugate(&self) -> Self {
        let width = self.0.first().copied().unwrap_or(0);
        Self((1..=width).map(|c| self.0.iter().filter(|&&p| p >= c).count()).collect())
    }

    /// Multiplicity of each part size, indexed by size.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.0.first().copied().unwrap_or(0) + 1];
        for &p in &self.0 {
            m[p] += 1;
        }
        m
    }

    /// All partitions of `n` in reverse lexicographic order.
    pub fn all(n: usize) -> Vec<Self> {
        fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=n.min(max)).rev() {
                cur.push(p);
                rec(n - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Parses `(2,1)`, `2,1`, `[2 1]` or `()`.
    pub fn parse(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
        let parts = inner
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|x| !x.is_empty())
            .map(|x| x.parse().map_err(|_| Error::Parse(format!("bad part `{x}`"))))
            .collect::<Result<Vec<usize>>>()?;
        Self::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_and_conjugates() {
        let counts: Vec<usize> = (0..8).map(|n| Partition::all(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15]);
        let l = Partition::parse("(3,1)").unwrap();
        assert_eq!(l.conjugate(), Partition::parse("2,1,1").unwrap());
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(Partition::parse("()").unwrap(), Partition::empty());
    }
}
