//! Morphisms `1 -> W` as oriented perfect matchings on a line of points.
//!
//! Every morphism `B -> T` is handled after bending its source around the right
//! side, so the line reads `T` followed by the reversed, reoriented `B`. Arcs hang
//! below the line; two arcs cross exactly when their endpoints interleave, and a
//! minimal drawing of a matching is unique up to isotopy and braid moves.
//!
//! Clockwise bubbles are pushed into the leftmost region. A clockwise loop in the
//! region at gap `g` equals the global bubble plus `label(g)`, where passing an
//! upward point lowers the label by one and a downward point raises it.

use std::collections::BTreeMap;

use super::object::Orientation;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LineDiagram {
    pub orient: Vec<Orientation>,
    pub partner: Vec<usize>,
    pub bubbles: u32,
}

/// Integer combination of line diagrams.
pub type LineComb = BTreeMap<LineDiagram, i64>;

pub fn add_into(acc: &mut LineComb, d: LineDiagram, c: i64) {
    if c == 0 {
        return;
    }
    let e = acc.entry(d.clone()).or_insert(0);
    *e += c;
    if *e == 0 {
        acc.remove(&d);
    }
}

fn single(d: LineDiagram) -> LineComb {
    let mut m = LineComb::new();
    m.insert(d, 1);
    m
}

const MAX_DEPTH: usize = 4096;

fn unsupported(what: &str) -> Error {
    Error::UnsupportedConfiguration(what.to_string())
}

impl LineDiagram {
    #[cfg(test)]
    pub fn empty() -> Self {
        Self { orient: Vec::new(), partner: Vec::new(), bubbles: 0 }
    }

    pub fn len(&self) -> usize {
        self.orient.len()
    }

    pub fn crosses(&self, x: usize, y: usize) -> bool {
        let (a, b) = sorted(x, self.partner[x]);
        let (c, d) = sorted(y, self.partner[y]);
        (a < c && c < b && b < d) || (c < a && a < d && d < b)
    }

    pub fn crossing_count(&self) -> usize {
        let n = self.len();
        let mut count = 0;
        for x in 0..n {
            for y in 0..n {
                if x < self.partner[x] && y < self.partner[y] && x < y && self.crosses(x, y) {
                    count += 1;
                }
            }
        }
        count
    }

    /// Sum of the orientation weights of points left of gap `g`.
    pub fn label(&self, g: usize) -> i64 {
        self.orient[..g].iter().map(|o| o.weight()).sum()
    }

    /// Inserts an arc at positions `p, p + 1`, the left end with orientation `left`.
    pub fn with_cup(&self, p: usize, left: Orientation) -> Self {
        let shift = |q: usize| if q >= p { q + 2 } else { q };
        let mut orient = self.orient.clone();
        orient.splice(p..p, [left, left.flip()]);
        let mut partner: Vec<usize> = self.partner.iter().map(|&q| shift(q)).collect();
        partner.splice(p..p, [p + 1, p]);
        Self { orient, partner, bubbles: self.bubbles }
    }

    /// Removes points `i, i + 1` and joins their former partners.
    fn joined(&self, i: usize) -> Self {
        let (a, b) = (self.partner[i], self.partner[i + 1]);
        let mut partner = self.partner.clone();
        if a != i + 1 {
            partner[a] = b;
            partner[b] = a;
        }
        let shift = |q: usize| if q > i + 1 { q - 2 } else { q };
        let partner = partner.iter().enumerate().filter(|&(p, _)| p != i && p != i + 1).map(|(_, &q)| shift(q)).collect();
        let mut orient = self.orient.clone();
        orient.drain(i..i + 2);
        Self { orient, partner, bubbles: self.bubbles }
    }

    /// Exchanges the points at `j` and `j + 1` together with their strands.
    pub fn swapped(&self, j: usize) -> Self {
        let mut d = self.clone();
        let (a, b) = (self.partner[j], self.partner[j + 1]);
        if a == j + 1 {
            d.orient.swap(j, j + 1);
            return d;
        }
        d.orient.swap(j, j + 1);
        d.partner.swap(j, j + 1);
        d.partner[a] = j + 1;
        d.partner[b] = j;
        d
    }

    /// Places a crossing on top of the points `j, j + 1`.
    pub fn cross(&self, j: usize) -> Result<LineComb> {
        self.cross_at(j, 0)
    }

    /// Places a cap on top of the points `i, i + 1`.
    pub fn cap(&self, i: usize) -> Result<LineComb> {
        self.cap_at(i, 0)
    }

    fn cross_at(&self, j: usize, depth: usize) -> Result<LineComb> {
        if depth > MAX_DEPTH {
            return Err(unsupported("rewriting depth exceeded"));
        }
        if self.partner[j] == j + 1 {
            return match self.orient[j] {
                Orientation::Down => Ok(LineComb::new()),
                Orientation::Up => Err(unsupported("right curl")),
            };
        }
        let s = self.swapped(j);
        if !self.crosses(j, j + 1) {
            return Ok(single(s));
        }
        let mut out = single(s.clone());
        if s.orient[j] == Orientation::Down && s.orient[j + 1] == Orientation::Up {
            for (d, c) in s.cap_at(j, depth + 1)? {
                add_into(&mut out, d.with_cup(j, Orientation::Down), -c);
            }
        }
        Ok(out)
    }

    fn cap_at(&self, i: usize, depth: usize) -> Result<LineComb> {
        if depth > MAX_DEPTH {
            return Err(unsupported("rewriting depth exceeded"));
        }
        let m = self.len();
        let (a, b) = (self.partner[i], self.partner[i + 1]);
        if a == i + 1 {
            let mut d = self.joined(i);
            return Ok(match self.orient[i] {
                Orientation::Down => single(d),
                Orientation::Up => {
                    let mut out = LineComb::new();
                    add_into(&mut out, d.clone(), self.label(i));
                    d.bubbles += 1;
                    add_into(&mut out, d, 1);
                    out
                }
            });
        }
        if self.crosses(i, i + 1) {
            return match self.orient[i] {
                Orientation::Down => Ok(LineComb::new()),
                Orientation::Up => Err(unsupported("right curl")),
            };
        }
        // order of points met walking away from i + 1 around the boundary circle
        let ord = |p: usize| if p < i { i - 1 - p } else { i + (m - 1 - p) };
        let (oa, ob) = (ord(a), ord(b));
        debug_assert!(oa < ob);
        let bad = |p: usize| {
            let (x, y) = sorted(ord(p), ord(self.partner[p]));
            x < oa && y > ob
        };
        if !(0..m).filter(|&p| p != i && p != i + 1).any(bad) {
            return Ok(single(self.joined(i)));
        }
        let outside = |j: usize| j + 1 < i || j > i + 1;
        // an arc with adjacent ends away from the cap factors out
        if let Some(j) = (0..m - 1).find(|&j| outside(j) && self.partner[j] == j + 1) {
            let inner = self.joined_arc(j);
            let (ci, cj) = if j < i { (i - 2, j) } else { (i, j - 2) };
            let mut out = LineComb::new();
            for (d, c) in inner.cap_at(ci, depth + 1)? {
                add_into(&mut out, d.with_cup(cj, self.orient[j]), c);
            }
            return Ok(out);
        }
        // a crossing between neighbours away from the cap is pulled above it
        if let Some(j) = (0..m - 1).find(|&j| outside(j) && self.crosses(j, j + 1)) {
            let jj = if j < i { j } else { j - 2 };
            let mut out = LineComb::new();
            for (d, c) in self.swapped(j).cap_at(i, depth + 1)? {
                for (e, c2) in d.cross_at(jj, depth + 1)? {
                    add_into(&mut out, e, c * c2);
                }
            }
            return Ok(out);
        }
        // pitchfork: the left neighbour passes under both legs of the cap
        if i >= 1 && a != i - 1 && bad(i - 1) {
            let mut out = LineComb::new();
            for (d, c) in self.swapped(i - 1).cross_at(i, depth + 1)? {
                for (e, c2) in d.cap_at(i - 1, depth + 1)? {
                    add_into(&mut out, e, c * c2);
                }
            }
            return Ok(out);
        }
        if i + 2 < m && b != i + 2 && bad(i + 2) {
            let mut out = LineComb::new();
            for (d, c) in self.swapped(i + 1).cross_at(i, depth + 1)? {
                for (e, c2) in d.cap_at(i + 1, depth + 1)? {
                    add_into(&mut out, e, c * c2);
                }
            }
            return Ok(out);
        }
        Err(unsupported("no rewrite rule applies to cap"))
    }

    /// Removes the arc `(j, j + 1)`.
    fn joined_arc(&self, j: usize) -> Self {
        debug_assert_eq!(self.partner[j], j + 1);
        self.joined(j)
    }
}

fn sorted(x: usize, y: usize) -> (usize, usize) {
    if x < y {
        (x, y)
    } else {
        (y, x)
    }
}

#[cfg(test)]
mod tests {
    use super::Orientation::{Down, Up};
    use super::*;

    #[test]
    fn loops() {
        let cw = LineDiagram::empty().with_cup(0, Up).cap(0).unwrap();
        assert_eq!(cw, single(LineDiagram { bubbles: 1, ..LineDiagram::empty() }));
        let ccw = LineDiagram::empty().with_cup(0, Down).cap(0).unwrap();
        assert_eq!(ccw, single(LineDiagram::empty()));
    }

    #[test]
    fn cup_then_cross_kinks() {
        let d = LineDiagram::empty().with_cup(0, Down);
        assert!(d.cross(0).unwrap().is_empty());
        let d = LineDiagram::empty().with_cup(0, Up);
        assert!(matches!(d.cross(0), Err(Error::UnsupportedConfiguration(_))));
    }

    #[test]
    fn swap_is_involutive() {
        let d = LineDiagram::empty().with_cup(0, Up).with_cup(2, Down).with_cup(1, Up);
        for j in 0..d.len() - 1 {
            assert_eq!(d.swapped(j).swapped(j), d);
        }
    }
}
