//! Permutations of the branch set `{1, ..., 2g+2}`.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

use super::check_label_genus;

/// A bijection of the branch labels. Stored zero-based; displayed and parsed
/// one-based in disjoint cycle notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BranchPermutation {
    genus: u32,
    images: Vec<u8>,
}

impl BranchPermutation {
    /// `images[i]` is the zero-based image of label `i + 1`.
    pub fn new(genus: u32, images: Vec<usize>) -> Result<Self> {
        let n = check_label_genus(genus)?;
        if images.len() != n {
            return Err(Error::DimensionMismatch {
                context: "BranchPermutation::new",
                expected: n,
                found: images.len(),
            });
        }
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::input("perm", "images do not form a bijection"));
            }
            seen[i] = true;
        }
        Ok(Self {
            genus,
            images: images.into_iter().map(|i| i as u8).collect(),
        })
    }

    pub fn identity(genus: u32) -> Result<Self> {
        let n = check_label_genus(genus)?;
        Ok(Self {
            genus,
            images: (0..n as u8).collect(),
        })
    }

    /// Parses disjoint cycle notation such as `"(1 2 3)(4 5 6)"`.
    ///
    /// Labels are `1..=2g+2`, separated by spaces and/or commas; omitted labels
    /// are fixed. The empty string and `"()"` denote the identity.
    pub fn parse(genus: u32, text: &str) -> Result<Self> {
        let n = check_label_genus(genus)?;
        let err = |msg: String| Error::input("perm", msg);
        let mut images: Vec<usize> = (0..n).collect();
        let mut used = vec![false; n];
        let mut rest = text.trim();
        while !rest.is_empty() {
            let Some(body) = rest.strip_prefix('(') else {
                return Err(err(format!("expected '(' at {rest:?}")));
            };
            let Some(close) = body.find(')') else {
                return Err(err("unbalanced parenthesis".into()));
            };
            let cycle = body[..close]
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|s| !s.is_empty())
                .map(|tok| {
                    let label: usize = tok
                        .parse()
                        .map_err(|_| err(format!("{tok:?} is not a label")))?;
                    if label == 0 || label > n {
                        return Err(err(format!("label {label} outside 1..={n}")));
                    }
                    if used[label - 1] {
                        return Err(err(format!("label {label} appears twice")));
                    }
                    used[label - 1] = true;
                    Ok(label - 1)
                })
                .collect::<Result<Vec<_>>>()?;
            for (k, &from) in cycle.iter().enumerate() {
                images[from] = cycle[(k + 1) % cycle.len()];
            }
            rest = body[close + 1..].trim_start();
        }
        Self::new(genus, images)
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    /// Number of branch points, `2g + 2`.
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Zero-based image of a zero-based label.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    /// Image of a subset given as a bitmask (bit `i` is label `i + 1`).
    pub fn apply_mask(&self, mask: u32) -> u32 {
        let mut out = 0;
        let mut rest = mask;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            out |= 1 << self.images[i];
            rest &= rest - 1;
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j as usize)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.genus != other.genus {
            return Err(Error::GenusMismatch {
                expected: self.genus,
                found: other.genus,
            });
        }
        Ok(Self {
            genus: self.genus,
            images: other.images.iter().map(|&i| self.images[i as usize]).collect(),
        })
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u8; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j as usize] = i as u8;
        }
        Self {
            genus: self.genus,
            images: inv,
        }
    }

    /// All cycles, fixed points included, as one-based labels. Each cycle starts
    /// at its smallest label; cycles are ordered by that label.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i + 1);
                i = self.images[i] as usize;
            }
            out.push(cycle);
        }
        out
    }

    /// Multiplicative order (lcm of cycle lengths).
    pub fn order(&self) -> u64 {
        use num_integer::Integer;
        self.cycles().iter().fold(1u64, |acc, c| acc.lcm(&(c.len() as u64)))
    }
}

impl fmt::Display for BranchPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for cycle in self.cycles().into_iter().filter(|c| c.len() > 1) {
            let labels: Vec<String> = cycle.iter().map(ToString::to_string).collect();
            write!(f, "({})", labels.join(" "))?;
            any = true;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

impl fmt::Debug for BranchPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BranchPermutation(g={}, {self})", self.genus)
    }
}

/// The group generated by `gens`, by breadth-first closure.
/// Fails once more than `cap` elements have been found.
pub fn generate_group(gens: &[BranchPermutation], cap: usize) -> Result<Vec<BranchPermutation>> {
    let Some(first) = gens.first() else {
        return Err(Error::EmptyInput("generate_group needs at least one generator"));
    };
    let id = BranchPermutation::identity(first.genus)?;
    let mut seen: HashSet<BranchPermutation> = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    let mut elements = Vec::new();
    while let Some(g) = queue.pop_front() {
        for s in gens {
            let h = s.compose(&g)?;
            if seen.insert(h.clone()) {
                if seen.len() > cap {
                    return Err(Error::BoundExceeded {
                        what: "group order",
                        limit: cap,
                        found: seen.len(),
                    });
                }
                queue.push_back(h);
            }
        }
        elements.push(g);
    }
    elements.sort();
    Ok(elements)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let p = BranchPermutation::parse(2, "(1 2 3)(4 5)").unwrap();
        assert_eq!(p.apply(0), 1);
        assert_eq!(p.apply(2), 0);
        assert_eq!(p.apply(5), 5);
        assert_eq!(p.to_string(), "(1 2 3)(4 5)");
        assert_eq!(BranchPermutation::parse(2, "(1,4)(2, 5) (3 6)").unwrap().to_string(), "(1 4)(2 5)(3 6)");
        assert!(BranchPermutation::parse(2, "").unwrap().is_identity());
        assert!(BranchPermutation::parse(2, "()").unwrap().is_identity());
        assert_eq!(BranchPermutation::parse(2, "(5)").unwrap().to_string(), "()");
    }

    #[test]
    fn parse_errors_name_the_field() {
        for bad in ["(1 2", "1 2", "(1 9)", "(1 2)(2 3)", "(a b)", "(0 1)"] {
            match BranchPermutation::parse(2, bad) {
                Err(Error::InvalidInput { field, .. }) => assert_eq!(field, "perm", "{bad}"),
                other => panic!("{bad}: {other:?}"),
            }
        }
    }

    #[test]
    fn inverse_and_order() {
        let p = BranchPermutation::parse(3, "(1 2 3)(4 5 6)(7 8)").unwrap();
        assert!(p.compose(&p.inverse()).unwrap().is_identity());
        assert_eq!(p.order(), 6);
    }

    #[test]
    fn closure_sizes() {
        let r = BranchPermutation::parse(2, "(1 2 3 4 5 6)").unwrap();
        let s = BranchPermutation::parse(2, "(1 6)(2 5)(3 4)").unwrap();
        assert_eq!(generate_group(&[r.clone()], 100).unwrap().len(), 6);
        assert_eq!(generate_group(&[r, s], 100).unwrap().len(), 12);
        let t = BranchPermutation::parse(2, "(1 2)").unwrap();
        let c = BranchPermutation::parse(2, "(1 2 3 4 5 6)").unwrap();
        assert!(matches!(generate_group(&[t, c], 100), Err(Error::BoundExceeded { .. })));
    }
}
