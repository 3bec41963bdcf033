use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Orientation {
    Up,
    Down,
}

impl Orientation {
    pub fn flip(self) -> Self {
        match self {
            Orientation::Up => Orientation::Down,
            Orientation::Down => Orientation::Up,
        }
    }

    /// Change of the region label when passing the point from left to right.
    pub fn weight(self) -> i64 {
        match self {
            Orientation::Up => -1,
            Orientation::Down => 1,
        }
    }
}

/// A word in `↑` and `↓`, written `^` and `v`.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HeisObject(pub Vec<Orientation>);

impl HeisObject {
    pub fn unit() -> Self {
        Self(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `(↑↓)^k`.
    pub fn alternating(k: usize) -> Self {
        Self((0..k).flat_map(|_| [Orientation::Up, Orientation::Down]).collect())
    }

    pub fn repeat(o: Orientation, k: usize) -> Self {
        Self(vec![o; k])
    }

    pub fn concat(&self, other: &Self) -> Self {
        Self(self.0.iter().chain(&other.0).copied().collect())
    }

    /// Number of `↑↓` pairs when the object alternates `↑↓↑↓…`.
    pub fn alternating_pairs(&self) -> Option<usize> {
        (*self == Self::alternating(self.len() / 2) && self.len().is_multiple_of(2)).then_some(self.len() / 2)
    }

    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "1" {
            return Ok(Self::unit());
        }
        s.chars()
            .map(|c| match c {
                '^' => Ok(Orientation::Up),
                'v' => Ok(Orientation::Down),
                _ => Err(Error::Parse(format!("bad orientation `{c}`"))),
            })
            .collect::<Result<_>>()
            .map(Self)
    }
}

impl fmt::Display for HeisObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "1");
        }
        for o in &self.0 {
            write!(f, "{}", if *o == Orientation::Up { '^' } else { 'v' })?;
        }
        Ok(())
    }
}

impl fmt::Debug for HeisObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
