//! Spin structures on a hyperelliptic curve in terms of its branch points.
//!
//! For `y^2 = Π (x - e_i)` of genus `g` with branch set `B = {1, ..., 2g+2}`,
//! spin structures are subsets `T ⊆ B` with `|T| ≡ g + 1 (mod 2)` taken modulo
//! `T ~ T^c`. Even subsets modulo complement form the group `E_g ≅ Z_2^{2g}`,
//! which acts on spin classes by symmetric difference. An automorphism acts
//! through the permutation it induces on `B`.
//!
//! Subsets are bitmasks, bit `i` standing for label `i + 1`. Each class is
//! stored through its canonical representative: the smaller of `T` and `T^c`,
//! and on a tie (`|T| = g + 1`) the one containing label 1.

mod bolza;
mod perm;

pub use bolza::{bolza_report, bolza_table, BolzaCase, BolzaRow};
pub use perm::{generate_group, BranchPermutation};

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Largest genus whose branch set fits the 32-bit masks.
pub const MAX_LABEL_GENUS: u32 = 15;
/// Largest genus for exhaustive sweeps over all classes.
pub const MAX_ENUM_GENUS: u32 = 8;

pub(crate) fn label_count(genus: u32) -> usize {
    2 * genus as usize + 2
}

pub(crate) fn check_label_genus(genus: u32) -> Result<usize> {
    if genus == 0 {
        return Err(Error::input("genus", "must be at least 1"));
    }
    if genus > MAX_LABEL_GENUS {
        return Err(Error::BoundExceeded {
            what: "genus",
            limit: MAX_LABEL_GENUS as usize,
            found: genus as usize,
        });
    }
    Ok(label_count(genus))
}

fn check_enum_genus(genus: u32) -> Result<()> {
    check_label_genus(genus)?;
    if genus > MAX_ENUM_GENUS {
        return Err(Error::BoundExceeded {
            what: "genus for enumeration",
            limit: MAX_ENUM_GENUS as usize,
            found: genus as usize,
        });
    }
    Ok(())
}

fn full_mask(genus: u32) -> u32 {
    let n = label_count(genus);
    if n == 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

fn canonical(genus: u32, mask: u32) -> u32 {
    let comp = full_mask(genus) ^ mask;
    match mask.count_ones().cmp(&comp.count_ones()) {
        std::cmp::Ordering::Less => mask,
        std::cmp::Ordering::Greater => comp,
        std::cmp::Ordering::Equal => {
            if mask & 1 == 1 {
                mask
            } else {
                comp
            }
        }
    }
}

fn mask_labels(mask: u32) -> Vec<usize> {
    (0..32).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect()
}

fn labels_to_mask(genus: u32, labels: &[usize]) -> Result<u32> {
    let n = check_label_genus(genus)?;
    let mut mask = 0u32;
    for &l in labels {
        if l == 0 || l > n {
            return Err(Error::input("labels", format!("label {l} outside 1..={n}")));
        }
        if mask >> (l - 1) & 1 == 1 {
            return Err(Error::input("labels", format!("label {l} repeated")));
        }
        mask |= 1 << (l - 1);
    }
    Ok(mask)
}

fn write_labels(f: &mut fmt::Formatter<'_>, mask: u32) -> fmt::Result {
    let labels: Vec<String> = mask_labels(mask).iter().map(ToString::to_string).collect();
    write!(f, "{{{}}}", labels.join(","))
}

fn same_genus(expected: u32, found: u32) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::GenusMismatch { expected, found })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

/// A spin structure `[T]`, `|T| ≡ g + 1 (mod 2)`, modulo complement.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpinClass {
    genus: u32,
    rep: u32,
}

impl SpinClass {
    pub fn from_mask(genus: u32, mask: u32) -> Result<Self> {
        check_label_genus(genus)?;
        if mask & !full_mask(genus) != 0 {
            return Err(Error::input("labels", "mask has bits beyond 2g+2"));
        }
        if mask.count_ones() % 2 != (genus + 1) % 2 {
            return Err(Error::input(
                "labels",
                format!("|T| = {} must be congruent to g + 1 mod 2", mask.count_ones()),
            ));
        }
        Ok(Self {
            genus,
            rep: canonical(genus, mask),
        })
    }

    /// One-based labels of any representative.
    pub fn from_labels(genus: u32, labels: &[usize]) -> Result<Self> {
        Self::from_mask(genus, labels_to_mask(genus, labels)?)
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    /// Canonical representative as a bitmask.
    pub fn mask(&self) -> u32 {
        self.rep
    }

    pub fn labels(&self) -> Vec<usize> {
        mask_labels(self.rep)
    }

    /// Size of the canonical (smaller) representative.
    pub fn size(&self) -> u32 {
        self.rep.count_ones()
    }

    /// `h^0 = (g + 1 - |T_min|) / 2` for the smaller representative `T_min`.
    pub fn sections(&self) -> u32 {
        (self.genus + 1 - self.size()) / 2
    }

    pub fn parity(&self) -> Parity {
        class_parity(self)
    }
}

impl fmt::Display for SpinClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_labels(f, self.rep)
    }
}

impl fmt::Debug for SpinClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SpinClass(g={}, {self})", self.genus)
    }
}

/// An element of `E_g`: an even subset of `B` modulo complement.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EvenClass {
    genus: u32,
    rep: u32,
}

impl EvenClass {
    pub fn from_mask(genus: u32, mask: u32) -> Result<Self> {
        check_label_genus(genus)?;
        if mask & !full_mask(genus) != 0 {
            return Err(Error::input("labels", "mask has bits beyond 2g+2"));
        }
        if mask.count_ones() % 2 != 0 {
            return Err(Error::input("labels", "an element of E_g needs an even subset"));
        }
        Ok(Self {
            genus,
            rep: canonical(genus, mask),
        })
    }

    pub fn from_labels(genus: u32, labels: &[usize]) -> Result<Self> {
        Self::from_mask(genus, labels_to_mask(genus, labels)?)
    }

    pub fn zero(genus: u32) -> Result<Self> {
        Self::from_mask(genus, 0)
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn mask(&self) -> u32 {
        self.rep
    }

    pub fn labels(&self) -> Vec<usize> {
        mask_labels(self.rep)
    }
}

impl fmt::Display for EvenClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_labels(f, self.rep)
    }
}

impl fmt::Debug for EvenClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EvenClass(g={}, {self})", self.genus)
    }
}

fn sort_key(mask: u32) -> (u32, Vec<usize>) {
    (mask.count_ones(), mask_labels(mask))
}

fn enumerate_canonical(genus: u32, parity: u32) -> Vec<u32> {
    let full = full_mask(genus);
    let mut reps: Vec<u32> = (0..=full)
        .filter(|m| m.count_ones() % 2 == parity && canonical(genus, *m) == *m)
        .collect();
    reps.sort_by_cached_key(|&m| sort_key(m));
    reps
}

/// All `2^{2g}` spin classes, ordered by representative size then labels.
pub fn enumerate_spin_classes(genus: u32) -> Result<Vec<SpinClass>> {
    check_enum_genus(genus)?;
    Ok(enumerate_canonical(genus, (genus + 1) % 2)
        .into_iter()
        .map(|rep| SpinClass { genus, rep })
        .collect())
}

/// All `2^{2g}` elements of `E_g`, same ordering as the spin classes.
pub fn enumerate_even_classes(genus: u32) -> Result<Vec<EvenClass>> {
    check_enum_genus(genus)?;
    Ok(enumerate_canonical(genus, 0)
        .into_iter()
        .map(|rep| EvenClass { genus, rep })
        .collect())
}

/// Even iff `h^0 = (g + 1 - |T_min|) / 2` is even.
pub fn class_parity(c: &SpinClass) -> Parity {
    if c.sections() % 2 == 0 {
        Parity::Even
    } else {
        Parity::Odd
    }
}

/// `[T] + α_S = [T Δ S]`.
pub fn affine_add(c: &SpinClass, e: &EvenClass) -> Result<SpinClass> {
    same_genus(c.genus, e.genus)?;
    Ok(SpinClass {
        genus: c.genus,
        rep: canonical(c.genus, c.rep ^ e.rep),
    })
}

/// Image class `[p(T)]`.
pub fn permute_class(c: &SpinClass, p: &BranchPermutation) -> Result<SpinClass> {
    same_genus(c.genus, p.genus())?;
    Ok(SpinClass {
        genus: c.genus,
        rep: canonical(c.genus, p.apply_mask(c.rep)),
    })
}

/// Outcome of sweeping every class under one permutation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FixedCensus {
    /// Classes with `p(T) = T` or `p(T) = T^c`.
    pub fixed: u64,
    /// Of those, how many only via `p(T) = T^c`.
    pub swapped: u64,
}

pub fn fixed_census_brute(p: &BranchPermutation) -> Result<FixedCensus> {
    let genus = p.genus();
    let classes = enumerate_spin_classes(genus)?;
    let full = full_mask(genus);
    let mut census = FixedCensus { fixed: 0, swapped: 0 };
    for c in classes {
        let image = p.apply_mask(c.rep);
        if image == c.rep {
            census.fixed += 1;
        } else if image == full ^ c.rep {
            census.fixed += 1;
            census.swapped += 1;
        }
    }
    Ok(census)
}

/// Number of spin classes fixed by the permutation, by exhaustive sweep.
pub fn fixed_count_brute(p: &BranchPermutation) -> Result<u64> {
    Ok(fixed_census_brute(p)?.fixed)
}

/// Cycle data of a rotation-like permutation: every non-fixed label lies in a
/// cycle of the same length `n`, with at most two fixed labels.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct OrbitShape {
    #[serde(rename = "n")]
    order: u64,
    #[serde(rename = "fixed")]
    fixed_points: u32,
    #[serde(rename = "r")]
    free_orbits: u32,
}

impl OrbitShape {
    pub fn new(order: u64, fixed_points: u32, free_orbits: u32) -> Result<Self> {
        let bad = |m: String| Err(Error::InvalidShape(m));
        if order < 2 {
            return bad(format!("order {order} must be at least 2"));
        }
        if fixed_points > 2 {
            return bad(format!("{fixed_points} fixed points; at most 2 allowed"));
        }
        if order % 2 == 0 && fixed_points == 1 {
            return bad("even order cannot fix exactly one branch point".into());
        }
        let total = order * u64::from(free_orbits) + u64::from(fixed_points);
        if total < 4 || total % 2 == 1 {
            return bad(format!("n*r + fixed = {total} is not 2g + 2 for any g >= 1"));
        }
        Ok(Self {
            order,
            fixed_points,
            free_orbits,
        })
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn fixed_points(&self) -> u32 {
        self.fixed_points
    }

    pub fn free_orbits(&self) -> u32 {
        self.free_orbits
    }

    /// The genus with `n r + fixed = 2g + 2`.
    pub fn genus(&self) -> u32 {
        ((self.order * u64::from(self.free_orbits) + u64::from(self.fixed_points) - 2) / 2) as u32
    }
}

impl fmt::Display for OrbitShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} fixed={} r={}", self.order, self.fixed_points, self.free_orbits)
    }
}

pub fn classify_orbit_shape(p: &BranchPermutation) -> Result<OrbitShape> {
    let cycles = p.cycles();
    let fixed = cycles.iter().filter(|c| c.len() == 1).count();
    let mut lengths: Vec<usize> = cycles.iter().map(Vec::len).filter(|&l| l > 1).collect();
    lengths.sort_unstable();
    lengths.dedup();
    match lengths.as_slice() {
        [] => Err(Error::NotRotationLike("identity permutation".into())),
        [n] if fixed <= 2 => {
            let r = cycles.len() - fixed;
            OrbitShape::new(*n as u64, fixed as u32, r as u32)
        }
        [_] => Err(Error::NotRotationLike(format!("{fixed} fixed points (at most 2)"))),
        many => Err(Error::NotRotationLike(format!("mixed cycle lengths {many:?}"))),
    }
}

/// Invariant count from the orbit structure alone.
///
/// Odd order: `2^{r-2}`, `2^{r-1}`, `2^r` for 0, 1, 2 fixed points.
/// Even order: `2^{r-1}` (free, `g` even), `2^r` (free, `g` odd), `2^r` (two fixed).
pub fn fixed_count_closed_form(shape: &OrbitShape, genus: u32) -> Result<u64> {
    if shape.genus() != genus {
        return Err(Error::InvalidShape(format!(
            "{shape} describes genus {}, not {genus}",
            shape.genus()
        )));
    }
    let r = shape.free_orbits;
    let pow = |e: i64| -> Result<u64> {
        if e < 0 {
            Err(Error::InvalidShape(format!("{shape}: exponent {e} is negative")))
        } else {
            Ok(1u64 << e)
        }
    };
    let r = i64::from(r);
    if shape.order % 2 == 1 {
        match shape.fixed_points {
            0 => pow(r - 2),
            1 => pow(r - 1),
            _ => pow(r),
        }
    } else {
        match shape.fixed_points {
            0 if genus % 2 == 0 => pow(r - 1),
            0 => pow(r),
            1 => Err(Error::InvalidShape("even order with one fixed point".into())),
            _ => pow(r),
        }
    }
}

/// Spin classes fixed by every permutation in the list, i.e. by the group they
/// generate.
pub fn group_fixed_count(perms: &[BranchPermutation]) -> Result<u64> {
    let Some(first) = perms.first() else {
        return Err(Error::EmptyInput("group_fixed_count needs at least one permutation"));
    };
    let genus = first.genus();
    for p in perms {
        same_genus(genus, p.genus())?;
    }
    let classes = enumerate_spin_classes(genus)?;
    Ok(classes
        .iter()
        .filter(|c| {
            perms
                .iter()
                .all(|p| canonical(genus, p.apply_mask(c.rep)) == c.rep)
        })
        .count() as u64)
}
