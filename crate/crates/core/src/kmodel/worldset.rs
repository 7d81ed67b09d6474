use std::fmt;

use super::KWorld;

/// A set of worlds of K: possibly `−∞`, possibly a ray `{k ≤ b}`, and
/// finitely many closed intervals of negative integers.
///
/// The representation is canonical (intervals sorted, disjoint,
/// non-adjacent, and strictly above `b + 1`), so equality is structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SymbolicWorldSet {
    minus_inf: bool,
    ray: Option<i64>,
    intervals: Vec<(i64, i64)>,
}

/// Lower end of a ray in the flat representation used by the set
/// operations.
const NEG: i64 = i64::MIN;

impl SymbolicWorldSet {
    /// Builds a canonical set from arbitrary (possibly overlapping)
    /// intervals. Interval ends above `−1` are clipped.
    pub fn new(minus_inf: bool, ray: Option<i64>, intervals: impl IntoIterator<Item = (i64, i64)>) -> Self {
        let mut flat: Vec<(i64, i64)> = intervals.into_iter().collect();
        if let Some(b) = ray {
            flat.push((NEG, b));
        }
        Self::from_flat(minus_inf, flat)
    }

    fn from_flat(minus_inf: bool, mut flat: Vec<(i64, i64)>) -> Self {
        flat.retain(|&(lo, hi)| lo <= hi.min(-1));
        flat.sort_unstable();
        let mut merged: Vec<(i64, i64)> = Vec::with_capacity(flat.len());
        for (lo, hi) in flat {
            let hi = hi.min(-1);
            match merged.last_mut() {
                Some(last) if lo <= last.1.saturating_add(1) => last.1 = last.1.max(hi),
                _ => merged.push((lo, hi)),
            }
        }
        let ray = match merged.first() {
            Some(&(NEG, b)) => {
                merged.remove(0);
                Some(b)
            }
            _ => None,
        };
        SymbolicWorldSet { minus_inf, ray, intervals: merged }
    }

    fn flat(&self) -> Vec<(i64, i64)> {
        let mut v = Vec::with_capacity(self.intervals.len() + 1);
        if let Some(b) = self.ray {
            v.push((NEG, b));
        }
        v.extend_from_slice(&self.intervals);
        v
    }

    pub fn empty() -> Self {
        SymbolicWorldSet { minus_inf: false, ray: None, intervals: Vec::new() }
    }

    /// Every world of K.
    pub fn all() -> Self {
        SymbolicWorldSet { minus_inf: true, ray: Some(-1), intervals: Vec::new() }
    }

    /// `ℤ⁻`
    pub fn integers() -> Self {
        SymbolicWorldSet { minus_inf: false, ray: Some(-1), intervals: Vec::new() }
    }

    pub fn origin() -> Self {
        SymbolicWorldSet { minus_inf: true, ray: None, intervals: Vec::new() }
    }

    pub fn ray_below(b: i64) -> Self {
        Self::new(false, Some(b), [])
    }

    pub fn interval(lo: i64, hi: i64) -> Self {
        Self::new(false, None, [(lo, hi)])
    }

    pub fn singleton(w: KWorld) -> Self {
        match w {
            KWorld::MinusInf => Self::origin(),
            KWorld::Int(k) => Self::interval(k, k),
        }
    }

    pub fn minus_inf(&self) -> bool {
        self.minus_inf
    }

    pub fn ray(&self) -> Option<i64> {
        self.ray
    }

    pub fn intervals(&self) -> &[(i64, i64)] {
        &self.intervals
    }

    pub fn has_ray(&self) -> bool {
        self.ray.is_some()
    }

    pub fn is_empty(&self) -> bool {
        !self.minus_inf && self.ray.is_none() && self.intervals.is_empty()
    }

    /// Whether the integer part is empty.
    pub fn no_integers(&self) -> bool {
        self.ray.is_none() && self.intervals.is_empty()
    }

    /// Least integer element, when the integer part is nonempty and has no
    /// ray.
    pub fn least_integer(&self) -> Option<i64> {
        if self.ray.is_some() {
            return None;
        }
        self.intervals.first().map(|&(lo, _)| lo)
    }

    pub fn contains(&self, w: KWorld) -> bool {
        match w {
            KWorld::MinusInf => self.minus_inf,
            KWorld::Int(k) => {
                self.ray.is_some_and(|b| k <= b) || self.intervals.iter().any(|&(lo, hi)| lo <= k && k <= hi)
            }
        }
    }

    pub fn complement(&self) -> Self {
        let mut gaps = Vec::new();
        let mut next = NEG;
        for (lo, hi) in self.flat() {
            if lo > next {
                gaps.push((next, lo - 1));
            }
            next = hi.saturating_add(1);
        }
        if next <= -1 {
            gaps.push((next, -1));
        }
        Self::from_flat(!self.minus_inf, gaps)
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut flat = self.flat();
        flat.extend(other.flat());
        Self::from_flat(self.minus_inf || other.minus_inf, flat)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let (a, b) = (self.flat(), other.flat());
        let (mut i, mut j) = (0, 0);
        let mut out = Vec::new();
        while i < a.len() && j < b.len() {
            let lo = a[i].0.max(b[j].0);
            let hi = a[i].1.min(b[j].1);
            if lo <= hi {
                out.push((lo, hi));
            }
            if a[i].1 < b[j].1 {
                i += 1;
            } else {
                j += 1;
            }
        }
        Self::from_flat(self.minus_inf && other.minus_inf, out)
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.intersection(&other.complement())
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.difference(other).is_empty()
    }
}

impl fmt::Display for SymbolicWorldSet {
    /// `{-inf, ..-5, -3..-2, -1}`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.minus_inf {
            parts.push("-inf".to_string());
        }
        if let Some(b) = self.ray {
            parts.push(format!("..{b}"));
        }
        for &(lo, hi) in &self.intervals {
            parts.push(if lo == hi { lo.to_string() } else { format!("{lo}..{hi}") });
        }
        write!(f, "{{{}}}", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn canonical_forms() {
        let s = SymbolicWorldSet::new(false, Some(-10), [(-9, -8), (-3, -2), (-2, -1), (-20, -15)]);
        assert_eq!(s.ray(), Some(-8));
        assert_eq!(s.intervals(), &[(-3, -1)]);
        assert_eq!(s.to_string(), "{..-8, -3..-1}");
        assert_eq!(SymbolicWorldSet::new(false, None, [(-1, 5)]), SymbolicWorldSet::interval(-1, -1));
    }

    #[test]
    fn complement_and_difference() {
        let a = SymbolicWorldSet::new(false, Some(-5), [(-2, -2)]);
        let b = SymbolicWorldSet::ray_below(-7);
        let d = a.difference(&b);
        assert_eq!(d, SymbolicWorldSet::new(false, None, [(-6, -5), (-2, -2)]));
        assert_eq!(SymbolicWorldSet::all().complement(), SymbolicWorldSet::empty());
        assert_eq!(a.complement(), SymbolicWorldSet::new(true, None, [(-4, -3), (-1, -1)]));
    }

    fn arb_set() -> impl Strategy<Value = SymbolicWorldSet> {
        (any::<bool>(), proptest::option::of(-30i64..=-1), proptest::collection::vec((-30i64..=-1, 0i64..5), 0..5))
            .prop_map(|(m, r, iv)| SymbolicWorldSet::new(m, r, iv.into_iter().map(|(lo, len)| (lo - len, lo))))
    }

    fn members(s: &SymbolicWorldSet) -> Vec<bool> {
        std::iter::once(KWorld::MinusInf)
            .chain((-60..=-1).map(KWorld::Int))
            .map(|w| s.contains(w))
            .collect()
    }

    proptest! {
        #[test]
        fn operations_agree_with_membership(a in arb_set(), b in arb_set()) {
            let (ma, mb) = (members(&a), members(&b));
            let zip = |s: &SymbolicWorldSet, op: fn(bool, bool) -> bool| {
                members(s) == ma.iter().zip(&mb).map(|(&x, &y)| op(x, y)).collect::<Vec<_>>()
            };
            prop_assert!(zip(&a.union(&b), |x, y| x || y));
            prop_assert!(zip(&a.intersection(&b), |x, y| x && y));
            prop_assert!(zip(&a.difference(&b), |x, y| x && !y));
            prop_assert_eq!(members(&a.complement()), ma.iter().map(|x| !x).collect::<Vec<_>>());
            // canonical: equal membership below -60 is fixed by the ray
            prop_assert_eq!(a == b, ma == mb && a.has_ray() == b.has_ray());
        }

        #[test]
        fn ray_cannot_split(a in arb_set(), b in arb_set()) {
            prop_assert!(!(a.difference(&b).has_ray() && a.intersection(&b).has_ray()));
        }
    }
}
