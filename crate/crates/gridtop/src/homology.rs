//! Reduced simplicial homology over small prime fields.
//!
//! Boundary matrices are kept sparse (one sorted `(row, coefficient)` list
//! per column) and ranks come from a left-to-right column elimination with
//! the pivot in the largest nonzero row. The chain complex is augmented: the
//! empty face sits in degree −1, so Betti numbers of the `{∅}` complex come
//! out as `b₋₁ = 1` and a nonempty complex has `b₋₁ = 0`.
//!
//! Every [`betti_suite`] run also performs the self-checks the rest of the
//! crate relies on: `∂∘∂ = 0` verified exactly over the integers, agreement
//! of the profiles across the requested primes, and the alternating-sum
//! identity between Betti numbers and the reduced Euler characteristic.

use std::collections::HashMap;

use crate::bits;
use crate::complex::{SimplicialComplex, DEFAULT_FACE_CAP};
use crate::error::{Error, Result};

/// Reduced Betti numbers of one complex over one prime field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiProfile {
    /// The field characteristic.
    pub prime: u32,
    /// `values[i]` is the Betti number in dimension `i − 1`.
    pub values: Vec<usize>,
    /// The void complex has no homology at all; it is flagged instead of
    /// being conflated with a contractible complex.
    pub void: bool,
}

impl BettiProfile {
    /// Betti number in dimension `dim` (−1-based; out of range is 0).
    pub fn betti(&self, dim: i64) -> usize {
        let idx = dim + 1;
        if idx < 0 {
            return 0;
        }
        self.values.get(idx as usize).copied().unwrap_or(0)
    }

    /// The dimensions with nonzero Betti number, ascending.
    pub fn nonzero(&self) -> Vec<(i64, usize)> {
        self.values
            .iter()
            .enumerate()
            .filter(|&(_, &b)| b > 0)
            .map(|(i, &b)| (i as i64 - 1, b))
            .collect()
    }

    /// Alternating sum `Σ (−1)^i b_i` over all dimensions including −1.
    pub fn alternating_sum(&self) -> i64 {
        self.values
            .iter()
            .enumerate()
            .map(|(i, &b)| if i % 2 == 0 { -(b as i64) } else { b as i64 })
            .sum()
    }

    /// Homotopy-type summary if the profile looks like a wedge of spheres.
    ///
    /// `None` when the complex is void or has nonzero Betti numbers in more
    /// than one dimension.
    pub fn wedge(&self) -> Option<WedgeProfile> {
        if self.void {
            return None;
        }
        match self.nonzero().as_slice() {
            [] => Some(WedgeProfile::Contractible),
            [(dim, count)] => Some(WedgeProfile::Spheres {
                count: *count,
                dim: *dim,
            }),
            _ => None,
        }
    }
}

/// A complex whose homology matches a wedge of equal-dimensional spheres.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WedgeProfile {
    /// All reduced Betti numbers vanish.
    Contractible,
    /// `count` spheres of dimension `dim` (count ≥ 1).
    Spheres { count: usize, dim: i64 },
}

/// Self-check outcomes performed on every suite run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConsistencyChecks {
    /// `∂_{d−1} ∘ ∂_d = 0`, verified over ℤ for every dimension.
    pub boundary_squares_to_zero: bool,
    /// All requested primes produced identical profiles.
    pub profiles_agree: bool,
    /// `Σ (−1)^i b_i` equals the reduced Euler characteristic for every prime.
    pub euler_matches_betti: bool,
}

impl ConsistencyChecks {
    /// All three checks passed.
    pub fn all_pass(&self) -> bool {
        self.boundary_squares_to_zero && self.profiles_agree && self.euler_matches_betti
    }
}

/// Betti profiles over several primes plus the shared self-checks.
#[derive(Debug, Clone)]
pub struct BettiSuite {
    /// One profile per requested prime, in request order.
    pub profiles: Vec<BettiProfile>,
    /// Reduced Euler characteristic, computed from the face census alone.
    pub euler: i64,
    /// The mandatory self-checks.
    pub checks: ConsistencyChecks,
}

impl BettiSuite {
    /// The profile for a given prime, if it was requested.
    pub fn profile(&self, prime: u32) -> Option<&BettiProfile> {
        self.profiles.iter().find(|p| p.prime == prime)
    }

    /// Wedge summary, defined only when the primes agree and the shape is a
    /// wedge of equal-dimensional spheres.
    pub fn wedge(&self) -> Option<WedgeProfile> {
        if !self.checks.profiles_agree {
            return None;
        }
        self.profiles.first().and_then(BettiProfile::wedge)
    }
}

/// Reduced Euler characteristic `Σ_{d≥0} (−1)^d f_d − 1`; the void complex
/// yields 0 by convention.
pub fn euler_characteristic(k: &SimplicialComplex) -> Result<i64> {
    euler_characteristic_with_cap(k, DEFAULT_FACE_CAP)
}

/// [`euler_characteristic`] with an explicit enumeration cap.
pub fn euler_characteristic_with_cap(k: &SimplicialComplex, cap: usize) -> Result<i64> {
    Ok(k.face_census_with_cap(cap)?
        .iter()
        .map(|&(d, c)| {
            if d.rem_euclid(2) == 0 {
                c as i64
            } else {
                -(c as i64)
            }
        })
        .sum())
}

/// Betti numbers over one prime, under the default enumeration cap.
pub fn reduced_betti(k: &SimplicialComplex, prime: u32) -> Result<BettiProfile> {
    reduced_betti_with_cap(k, prime, DEFAULT_FACE_CAP)
}

/// [`reduced_betti`] with an explicit enumeration cap.
pub fn reduced_betti_with_cap(
    k: &SimplicialComplex,
    prime: u32,
    cap: usize,
) -> Result<BettiProfile> {
    let faces = FaceTable::build(k, cap)?;
    Ok(faces.profile(check_prime(prime)?))
}

/// Betti profiles over several primes plus the mandatory self-checks, under
/// the default enumeration cap.
pub fn betti_suite(k: &SimplicialComplex, primes: &[u32]) -> Result<BettiSuite> {
    betti_suite_with_cap(k, primes, DEFAULT_FACE_CAP)
}

/// [`betti_suite`] with an explicit enumeration cap.
pub fn betti_suite_with_cap(
    k: &SimplicialComplex,
    primes: &[u32],
    cap: usize,
) -> Result<BettiSuite> {
    if primes.is_empty() {
        return Err(Error::domain("at least one prime is required"));
    }
    for &p in primes {
        check_prime(p)?;
    }
    let faces = FaceTable::build(k, cap)?;
    let profiles: Vec<BettiProfile> = primes.iter().map(|&p| faces.profile(p)).collect();
    let euler = euler_characteristic_with_cap(k, cap)?;
    let checks = ConsistencyChecks {
        boundary_squares_to_zero: faces.boundary_squares_to_zero(),
        profiles_agree: profiles
            .windows(2)
            .all(|w| w[0].values == w[1].values && w[0].void == w[1].void),
        euler_matches_betti: profiles.iter().all(|p| p.alternating_sum() == euler),
    };
    Ok(BettiSuite {
        profiles,
        euler,
        checks,
    })
}

fn check_prime(p: u32) -> Result<u32> {
    let prime = p >= 2
        && (2..p)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d));
    if prime {
        Ok(p)
    } else {
        Err(Error::domain(format!("{p} is not a prime")))
    }
}

/// All faces of a complex grouped by cardinality, with the integer boundary
/// matrices built once and specialised per prime on demand.
struct FaceTable {
    /// `by_size[s]` lists faces of cardinality `s`, ascending as bitmasks.
    by_size: Vec<Vec<u64>>,
}

impl FaceTable {
    fn build(k: &SimplicialComplex, cap: usize) -> Result<FaceTable> {
        let faces = k.all_faces_with_cap(cap)?;
        let top = faces
            .iter()
            .map(|f| f.count_ones() as usize)
            .max()
            .unwrap_or(0);
        let mut by_size = vec![Vec::new(); top + 1];
        for f in faces {
            by_size[f.count_ones() as usize].push(f);
        }
        Ok(FaceTable { by_size })
    }

    fn is_void(&self) -> bool {
        self.by_size.is_empty() || self.by_size[0].is_empty()
    }

    /// Columns of `∂` from cardinality `s` faces to cardinality `s−1` faces,
    /// with coefficients in {+1, −1} encoded as i8.
    fn boundary_columns(&self, s: usize) -> Vec<Vec<(u32, i8)>> {
        let rows = &self.by_size[s - 1];
        self.by_size[s]
            .iter()
            .map(|&f| {
                let mut col: Vec<(u32, i8)> = bits::iter(f)
                    .enumerate()
                    .map(|(i, v)| {
                        let tau = f & !bits::bit(v);
                        let row = rows.binary_search(&tau).expect("closed under faces") as u32;
                        (row, if i % 2 == 0 { 1 } else { -1 })
                    })
                    .collect();
                col.sort_unstable_by_key(|&(r, _)| r);
                col
            })
            .collect()
    }

    fn profile(&self, prime: u32) -> BettiProfile {
        if self.is_void() {
            return BettiProfile {
                prime,
                values: Vec::new(),
                void: true,
            };
        }
        let top = self.by_size.len() - 1;
        // ranks[s] = rank of the boundary map out of cardinality-s faces,
        // padded with zero maps at both ends.
        let ranks: Vec<usize> = std::iter::once(0)
            .chain((1..=top).map(|s| rank_mod_p(self.boundary_columns(s), prime)))
            .chain(std::iter::once(0))
            .collect();
        let values = (0..=top)
            .map(|s| self.by_size[s].len() - ranks[s] - ranks[s + 1])
            .collect();
        BettiProfile {
            prime,
            values,
            void: false,
        }
    }

    /// Exact integer check that consecutive boundary maps compose to zero.
    fn boundary_squares_to_zero(&self) -> bool {
        for s in 2..self.by_size.len() {
            for &f in &self.by_size[s] {
                let mut acc: HashMap<u64, i64> = HashMap::new();
                for (i, v) in bits::iter(f).enumerate() {
                    let tau = f & !bits::bit(v);
                    let sign_i = if i % 2 == 0 { 1i64 } else { -1 };
                    for (j, w) in bits::iter(tau).enumerate() {
                        let sign_j = if j % 2 == 0 { 1i64 } else { -1 };
                        *acc.entry(tau & !bits::bit(w)).or_insert(0) += sign_i * sign_j;
                    }
                }
                if acc.values().any(|&c| c != 0) {
                    return false;
                }
            }
        }
        true
    }
}

/// Rank of a sparse matrix over F_p by left-to-right column reduction with
/// pivots in the largest nonzero row.
fn rank_mod_p(columns: Vec<Vec<(u32, i8)>>, p: u32) -> usize {
    let p64 = u64::from(p);
    let norm = |c: i8| -> u64 {
        if c >= 0 {
            c as u64 % p64
        } else {
            (p64 - ((-c) as u64 % p64)) % p64
        }
    };
    // Pivot row -> reduced column stored as (row, coeff in 1..p).
    let mut pivots: HashMap<u32, Vec<(u32, u64)>> = HashMap::new();
    let mut rank = 0;
    for col in columns {
        let mut cur: Vec<(u32, u64)> = col
            .into_iter()
            .map(|(r, c)| (r, norm(c)))
            .filter(|&(_, c)| c != 0)
            .collect();
        while let Some(&(row, lead)) = cur.last() {
            match pivots.get(&row) {
                None => {
                    pivots.insert(row, cur);
                    rank += 1;
                    break;
                }
                Some(basis) => {
                    let basis_lead = basis.last().expect("pivot columns are nonzero").1;
                    let factor = lead * mod_inverse(basis_lead, p64) % p64;
                    cur = subtract_scaled(&cur, basis, factor, p64);
                }
            }
        }
    }
    rank
}

/// `a − factor·b` over F_p, both inputs sorted by row.
fn subtract_scaled(a: &[(u32, u64)], b: &[(u32, u64)], factor: u64, p: u64) -> Vec<(u32, u64)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let (row, val) = match (a.get(i), b.get(j)) {
            (Some(&(ra, va)), Some(&(rb, vb))) if ra == rb => {
                i += 1;
                j += 1;
                (ra, (va + p - factor * vb % p) % p)
            }
            (Some(&(ra, va)), Some(&(rb, _))) if ra < rb => {
                i += 1;
                (ra, va)
            }
            (Some(&(ra, va)), None) => {
                i += 1;
                (ra, va)
            }
            (_, Some(&(rb, vb))) => {
                j += 1;
                (rb, (p - factor * vb % p) % p)
            }
            (None, None) => unreachable!(),
        };
        if val != 0 {
            out.push((row, val));
        }
    }
    out
}

/// Inverse of `a` modulo the prime `p` (Fermat).
fn mod_inverse(a: u64, p: u64) -> u64 {
    let mut base = a % p;
    let mut exp = p - 2;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cutgen::total_cut_complex;
    use crate::graph::make_grid;
    use proptest::prelude::*;

    fn named(n: usize) -> Vec<String> {
        (1..=n).map(|i| i.to_string()).collect()
    }

    fn pentagon() -> SimplicialComplex {
        SimplicialComplex::from_labeled_facets(
            named(5),
            &[
                &["1", "2"],
                &["2", "3"],
                &["3", "4"],
                &["4", "5"],
                &["5", "1"],
            ],
        )
        .unwrap()
    }

    /// The 6-vertex triangulation of the real projective plane: the one
    /// standard example where F_2 and F_3 genuinely disagree.
    fn projective_plane() -> SimplicialComplex {
        SimplicialComplex::from_labeled_facets(
            named(6),
            &[
                &["1", "2", "3"],
                &["1", "2", "4"],
                &["1", "3", "5"],
                &["1", "4", "6"],
                &["1", "5", "6"],
                &["2", "3", "6"],
                &["2", "4", "5"],
                &["2", "5", "6"],
                &["3", "4", "5"],
                &["3", "4", "6"],
            ],
        )
        .unwrap()
    }

    #[test]
    fn circle_sphere_and_cone() {
        let s = betti_suite(&pentagon(), &[2, 3]).unwrap();
        assert_eq!(s.euler, -1);
        assert!(s.checks.all_pass());
        assert_eq!(s.profiles[0].values, vec![0, 0, 1]);
        assert_eq!(s.wedge(), Some(WedgeProfile::Spheres { count: 1, dim: 1 }));

        let two_points =
            SimplicialComplex::from_labeled_facets(named(2), &[&["1"], &["2"]]).unwrap();
        let s0 = betti_suite(&two_points, &[2, 3]).unwrap();
        assert_eq!(s0.euler, 1);
        assert_eq!(s0.wedge(), Some(WedgeProfile::Spheres { count: 1, dim: 0 }));

        let cone = pentagon().cone("apex").unwrap();
        let sc = betti_suite(&cone, &[2, 3]).unwrap();
        assert_eq!(sc.euler, 0);
        assert_eq!(sc.wedge(), Some(WedgeProfile::Contractible));
    }

    #[test]
    fn degenerate_complexes() {
        let e = SimplicialComplex::empty_face_only(named(2)).unwrap();
        let s = betti_suite(&e, &[2, 3]).unwrap();
        assert_eq!(s.euler, -1);
        assert_eq!(s.profiles[0].values, vec![1]);
        assert_eq!(s.profiles[0].betti(-1), 1);
        assert_eq!(s.wedge(), Some(WedgeProfile::Spheres { count: 1, dim: -1 }));

        let v = SimplicialComplex::void(named(2)).unwrap();
        let sv = betti_suite(&v, &[2, 3]).unwrap();
        assert_eq!(sv.euler, 0);
        assert!(sv.profiles[0].void);
        assert_eq!(sv.wedge(), None);
    }

    #[test]
    fn projective_plane_shows_torsion() {
        let s = betti_suite(&projective_plane(), &[2, 3]).unwrap();
        assert_eq!(s.euler, 0);
        assert!(s.checks.boundary_squares_to_zero);
        assert!(s.checks.euler_matches_betti);
        assert!(!s.checks.profiles_agree);
        assert_eq!(s.profile(2).unwrap().values, vec![0, 0, 1, 1]);
        assert_eq!(s.profile(3).unwrap().values, vec![0, 0, 0, 0]);
        assert_eq!(s.wedge(), None);
    }

    #[test]
    fn grid_family_spot_checks() {
        // 2×4 grid, k = 2: three 4-spheres.
        let k = total_cut_complex(&make_grid(2, 4).unwrap(), 2).unwrap();
        let s = betti_suite(&k, &[2, 3]).unwrap();
        assert!(s.checks.all_pass());
        assert_eq!(s.wedge(), Some(WedgeProfile::Spheres { count: 3, dim: 4 }));

        // 3×3 grid, k = 3: six 3-spheres.
        let k = total_cut_complex(&make_grid(3, 3).unwrap(), 3).unwrap();
        let s = betti_suite(&k, &[2, 3]).unwrap();
        assert!(s.checks.all_pass());
        assert_eq!(s.wedge(), Some(WedgeProfile::Spheres { count: 6, dim: 3 }));
    }

    #[test]
    fn prime_validation() {
        assert!(betti_suite(&pentagon(), &[4]).is_err());
        assert!(betti_suite(&pentagon(), &[1]).is_err());
        assert!(betti_suite(&pentagon(), &[]).is_err());
        assert!(betti_suite(&pentagon(), &[5, 7]).is_ok());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        /// Suspension shifts every reduced Betti number up by one.
        #[test]
        fn suspension_shifts_betti(masks in proptest::collection::vec(0u64..64, 1..8)) {
            let k = SimplicialComplex::from_facets(named(6), masks).unwrap();
            let sus = k.suspension("n", "s").unwrap();
            let a = betti_suite(&k, &[2, 3]).unwrap();
            let b = betti_suite(&sus, &[2, 3]).unwrap();
            prop_assert!(a.checks.boundary_squares_to_zero);
            prop_assert!(b.checks.boundary_squares_to_zero);
            for (pa, pb) in a.profiles.iter().zip(&b.profiles) {
                prop_assert_eq!(pb.betti(-1), 0);
                let top = pa.values.len() as i64;
                for dim in -1..=top {
                    prop_assert_eq!(pb.betti(dim + 1), pa.betti(dim));
                }
            }
        }

        /// Relabelling the universe never changes the profile.
        #[test]
        fn betti_is_label_invariant(masks in proptest::collection::vec(0u64..128, 1..8)) {
            let k = SimplicialComplex::from_facets(named(7), masks.clone()).unwrap();
            // Reverse the labels, keep the same masks: an honest relabelling.
            let reversed: Vec<String> = (1..=7).rev().map(|i| i.to_string()).collect();
            let k2 = SimplicialComplex::from_facets(reversed, masks).unwrap();
            let a = betti_suite(&k, &[3]).unwrap();
            let b = betti_suite(&k2, &[3]).unwrap();
            prop_assert_eq!(a.profiles[0].values.clone(), b.profiles[0].values.clone());
        }
    }
}
