//! Shelling orders: certification, construction, and search.
//!
//! A shelling order of a pure complex is an ordering of its facets such that
//! each facet meets the union of its predecessors in a nonempty union of
//! codimension-one faces of itself. Certification runs the pairwise
//! condition (for every earlier facet there is a predecessor whose
//! intersection with the new facet has full codimension one and contains the
//! given one); an independent oracle re-checks prefixes by purity of the
//! intersection complex, and the two must agree.
//!
//! Constructions: shedding-vertex composition (deletion order followed by the
//! link order coned over the vertex), lexicographic skeleton orders, product
//! orders for joins, an exhaustive subset-memoized search for small facet
//! counts, and a recursive order for the cut complexes of 2×n grid graphs.

use std::collections::HashSet;

use crate::bits;
use crate::complex::SimplicialComplex;
use crate::cutgen::cut_complex;
use crate::error::{Error, Result};
use crate::graph::make_grid;

/// Facet-count bound for [`search_shelling_order`] unless overridden.
pub const DEFAULT_SEARCH_BUDGET: usize = 14;

/// Outcome of certifying one candidate order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShellingCheck {
    /// Did the order pass?
    pub ok: bool,
    /// Is the complex pure? (A failed purity check fails the whole order.)
    pub pure: bool,
    /// 0-based index of the first facet violating the condition.
    pub first_failure: Option<usize>,
    /// For passing orders: the restriction face of each step (the vertices
    /// whose codimension-one faces are already covered). A step whose
    /// restriction equals the whole facet closes off a homology sphere.
    pub restrictions: Option<Vec<u64>>,
}

impl ShellingCheck {
    /// Number of steps glued along their entire boundary.
    pub fn full_restriction_steps(&self, order: &[u64]) -> usize {
        match &self.restrictions {
            Some(r) => r
                .iter()
                .zip(order)
                .filter(|&(&rest, &f)| rest == f && f != 0)
                .count(),
            None => 0,
        }
    }
}

fn order_matches_facets(k: &SimplicialComplex, order: &[u64]) -> Result<()> {
    let mut sorted: Vec<u64> = order.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::domain("order repeats a facet"));
    }
    if sorted != k.facets() {
        return Err(Error::domain(
            "order must list exactly the facets of the complex",
        ));
    }
    Ok(())
}

/// Certify a candidate shelling order via the pairwise condition.
///
/// # Errors
/// The order must list exactly the facets of `k`, each once.
pub fn check_shelling_order(k: &SimplicialComplex, order: &[u64]) -> Result<ShellingCheck> {
    order_matches_facets(k, order)?;
    if !k.is_pure() {
        return Ok(ShellingCheck {
            ok: false,
            pure: false,
            first_failure: None,
            restrictions: None,
        });
    }
    let mut restrictions = vec![0u64; order.len()];
    for j in 1..order.len() {
        let fj = order[j];
        // Predecessor intersections of full codimension one.
        let good: Vec<u64> = order[..j]
            .iter()
            .map(|&fi| fi & fj)
            .filter(|m| m.count_ones() + 1 == fj.count_ones())
            .collect();
        for &fi in &order[..j] {
            let cap = fi & fj;
            if !good.iter().any(|&g| cap & !g == 0) {
                return Ok(ShellingCheck {
                    ok: false,
                    pure: true,
                    first_failure: Some(j),
                    restrictions: None,
                });
            }
        }
        // Restriction face: vertices v with F_j ∖ v covered by a predecessor.
        restrictions[j] = bits::iter(fj)
            .filter(|&v| good.iter().any(|&g| (fj & !bits::bit(v)) & !g == 0))
            .fold(0, |m, v| m | bits::bit(v));
    }
    Ok(ShellingCheck {
        ok: true,
        pure: true,
        first_failure: None,
        restrictions: Some(restrictions),
    })
}

/// Independent certification oracle: for every prefix, the intersection of
/// the new facet's simplex with the complex generated so far must be pure of
/// dimension `dim(F_j) − 1`.
pub fn prefix_purity_check(k: &SimplicialComplex, order: &[u64]) -> Result<bool> {
    order_matches_facets(k, order)?;
    if !k.is_pure() {
        return Ok(false);
    }
    for j in 1..order.len() {
        let fj = order[j];
        let prev = SimplicialComplex::from_facets(k.labels().to_vec(), order[..j].to_vec())?;
        let fjx = SimplicialComplex::from_facets(k.labels().to_vec(), vec![fj])?;
        let meet = prev.intersect(&fjx)?;
        let want = fj.count_ones() as i64 - 2;
        match meet.dimension() {
            Err(_) => return Ok(false), // void intersection
            Ok(d) => {
                if d != want || !meet.is_pure() {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Is `v` a shedding vertex: is every facet of `del(v)` a facet of `k`?
pub fn is_shedding_vertex(k: &SimplicialComplex, v: usize) -> Result<bool> {
    let del = k.delete_vertex(v)?;
    Ok(del.facets().iter().all(|f| k.facets().contains(f)))
}

/// Compose a shelling of `k` from shellings of the deletion and the link of
/// a shedding vertex `v`: the deletion order first, then each link facet
/// extended by `v`.
///
/// # Errors
/// Checks every precondition and names the one that failed: `k` must be
/// pure, `v` a shedding vertex whose singleton is a face, and both orders
/// must certify for their complexes.
pub fn compose_shelling(
    k: &SimplicialComplex,
    v: usize,
    order_del: &[u64],
    order_lk: &[u64],
) -> Result<Vec<u64>> {
    if !k.is_pure() {
        return Err(Error::domain("compose_shelling requires a pure complex"));
    }
    if !is_shedding_vertex(k, v)? {
        return Err(Error::domain(format!(
            "vertex {} is not a shedding vertex",
            k.labels()[v]
        )));
    }
    let del = k.delete_vertex(v)?;
    let lk = k.link(bits::bit(v))?;
    if !check_shelling_order(&del, order_del)?.ok {
        return Err(Error::domain("deletion-side order is not a shelling order"));
    }
    if !check_shelling_order(&lk, order_lk)?.ok {
        return Err(Error::domain("link-side order is not a shelling order"));
    }
    let mut out = order_del.to_vec();
    out.extend(order_lk.iter().map(|&f| f | bits::bit(v)));
    Ok(out)
}

/// The `d`-skeleton of the simplex on `s` vertices together with its
/// lexicographic shelling order ((d+1)-subsets ordered lexicographically as
/// ascending tuples).
///
/// # Errors
/// Requires `0 ≤ d` and `d + 1 ≤ s`.
pub fn skeleton_shelling_order(s: usize, d: i64) -> Result<(SimplicialComplex, Vec<u64>)> {
    if d < 0 || (d + 1) as usize > s {
        return Err(Error::domain(format!(
            "skeleton dimension {d} out of range for a simplex on {s} vertices"
        )));
    }
    let labels: Vec<String> = (1..=s).map(|i| i.to_string()).collect();
    let complex = SimplicialComplex::simplex(labels).unwrap().skeleton(d);
    let mut order = complex.facets().to_vec();
    order.sort_by_key(|&f| bits::to_vec(f));
    Ok((complex, order))
}

/// Shelling order for a join: facets `F ∪ G` sorted by the positions of `F`
/// and `G` in the given orders (lexicographically).
///
/// # Errors
/// Both inputs must certify; universes must be disjoint.
pub fn join_shelling_order(
    a: &SimplicialComplex,
    order_a: &[u64],
    b: &SimplicialComplex,
    order_b: &[u64],
) -> Result<(SimplicialComplex, Vec<u64>)> {
    if !check_shelling_order(a, order_a)?.ok {
        return Err(Error::domain("left order is not a shelling order"));
    }
    if !check_shelling_order(b, order_b)?.ok {
        return Err(Error::domain("right order is not a shelling order"));
    }
    let joined = a.join(b)?;
    let shift = a.labels().len();
    let mut order = Vec::with_capacity(order_a.len() * order_b.len());
    for &fa in order_a {
        for &fb in order_b {
            order.push(fa | fb << shift);
        }
    }
    Ok((joined, order))
}

/// Result of the exhaustive search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    /// A certified shelling order.
    Found(Vec<u64>),
    /// The complex has no shelling order (exhaustively verified).
    NoneExists,
    /// The facet count exceeds the budget; nothing was decided.
    BudgetExceeded,
}

/// Exhaustive backtracking search for a shelling order, memoizing dead
/// prefix sets (validity of an extension depends only on the set of facets
/// already placed, not their order).
pub fn search_shelling_order(k: &SimplicialComplex, budget: usize) -> Result<SearchOutcome> {
    let facets = k.facets();
    if facets.len() > budget || facets.len() > 63 {
        return Ok(SearchOutcome::BudgetExceeded);
    }
    if !k.is_pure() {
        return Ok(SearchOutcome::NoneExists);
    }
    if facets.len() <= 1 {
        return Ok(SearchOutcome::Found(facets.to_vec()));
    }

    fn extends(chosen: &[u64], fj: u64) -> bool {
        if chosen.is_empty() {
            return true;
        }
        let good: Vec<u64> = chosen
            .iter()
            .map(|&fi| fi & fj)
            .filter(|m| m.count_ones() + 1 == fj.count_ones())
            .collect();
        chosen
            .iter()
            .all(|&fi| good.iter().any(|&g| (fi & fj) & !g == 0))
    }

    fn dfs(facets: &[u64], used: u64, chosen: &mut Vec<u64>, dead: &mut HashSet<u64>) -> bool {
        if chosen.len() == facets.len() {
            return true;
        }
        if dead.contains(&used) {
            return false;
        }
        for (i, &f) in facets.iter().enumerate() {
            if used & (1 << i) != 0 || !extends(chosen, f) {
                continue;
            }
            chosen.push(f);
            if dfs(facets, used | 1 << i, chosen, dead) {
                return true;
            }
            chosen.pop();
        }
        dead.insert(used);
        false
    }

    let mut chosen = Vec::new();
    let mut dead = HashSet::new();
    if dfs(facets, 0, &mut chosen, &mut dead) {
        Ok(SearchOutcome::Found(chosen))
    } else {
        Ok(SearchOutcome::NoneExists)
    }
}

// ---------------------------------------------------------------------------
// Recursive construction for cut complexes of 2×n grids.
// ---------------------------------------------------------------------------

/// Certified shelling order for the cut complex of the 2×n grid graph with
/// parameter `k`, built by the recursive shedding scheme (search is used
/// only for the constant-size base cases).
///
/// # Errors
/// Requires `n ≥ 3` and `3 ≤ k ≤ 2n−3`.
pub fn shelling_for_cut_2xn(n: usize, k: usize) -> Result<(SimplicialComplex, Vec<u64>)> {
    if n < 3 || k < 3 || k > 2 * n - 3 {
        return Err(Error::domain(format!(
            "shelling_for_cut_2xn requires n >= 3 and 3 <= k <= 2n−3, got n={n}, k={k}"
        )));
    }
    let g = make_grid(2, n)?;
    let complex = cut_complex(&g, k)?;
    let order = shell_grid(&complex, n, k)?;
    let check = check_shelling_order(&complex, &order)?;
    if !check.ok {
        return Err(Error::domain(format!(
            "internal: constructed order failed certification at step {:?}",
            check.first_failure
        )));
    }
    Ok((complex, order))
}

/// Run the search and insist on a result (used for fixed-size base cases).
fn search_or_fail(k: &SimplicialComplex) -> Result<Vec<u64>> {
    match search_shelling_order(k, DEFAULT_SEARCH_BUDGET)? {
        SearchOutcome::Found(order) => Ok(order),
        SearchOutcome::NoneExists => Err(Error::domain(
            "internal: base-case complex is not shellable",
        )),
        SearchOutcome::BudgetExceeded => Err(Error::capacity(format!(
            "base-case search over {} facets exceeds the budget {DEFAULT_SEARCH_BUDGET}",
            k.facet_count()
        ))),
    }
}

/// Order for the cut complex of the 2×n grid (3 ≤ k ≤ 2n−3), on any
/// universe whose first 2n labels are the grid's columns in order.
fn shell_grid(k_cx: &SimplicialComplex, n: usize, k: usize) -> Result<Vec<u64>> {
    debug_assert!((3..=2 * n - 3).contains(&k));
    if n == 3 {
        return search_or_fail(k_cx);
    }
    let b_top = 2 * n - 1;
    let link = k_cx.link(bits::bit(b_top))?;
    let del = k_cx.delete_vertex(b_top)?;
    let order_link = shell_prime(&link, n - 1, k)?;
    let order_del = shell_del_side(&del, n)?;
    compose_shelling(k_cx, b_top, &order_del, &order_link)
}

/// Order for the deletion side `del(b_n)` of the 2×n recursion: shed `a_n`,
/// with both leaves ordered by the grouped comparator.
fn shell_del_side(del: &SimplicialComplex, n: usize) -> Result<Vec<u64>> {
    let a_top = 2 * n - 2;
    let lk = del.link(bits::bit(a_top))?;
    let inner_del = del.delete_vertex(a_top)?;
    compose_shelling(
        del,
        a_top,
        &grouped_leaf_order(&inner_del),
        &grouped_leaf_order(&lk),
    )
}

/// Order for the cut complex of the pruned grid (2×(m+1) minus the last
/// bottom vertex) with 3 ≤ k ≤ 2m−1: shed the hanging vertex `a_{m+1}`.
fn shell_prime(k1: &SimplicialComplex, m: usize, k: usize) -> Result<Vec<u64>> {
    debug_assert!((3..=2 * m - 1).contains(&k));
    let v = 2 * m; // a_{m+1} in column-major indexing
    let v_face = k1.is_face(bits::bit(v));
    let d = if v_face {
        k1.delete_vertex(v)?
    } else {
        k1.clone()
    };
    // Inside the deletion, shed b_m; both leaves take the pivot order.
    let b_m = 2 * m - 1;
    let a_m = 2 * m - 2;
    let d_lk = d.link(bits::bit(b_m))?;
    let d_del = d.delete_vertex(b_m)?;
    let order_d = compose_shelling(
        &d,
        b_m,
        &pivot_leaf_order(&d_del, a_m),
        &pivot_leaf_order(&d_lk, a_m),
    )?;
    if !v_face {
        return Ok(order_d);
    }
    let link = k1.link(bits::bit(v))?; // the cut complex of the 2×m grid
    let order_link = if k <= 2 * m - 3 {
        shell_grid(&link, m, k)?
    } else {
        // k = 2m−2: facets are complements of 2-vertex cuts, a fixed small
        // family; certify by search.
        search_or_fail(&link)?
    };
    compose_shelling(k1, v, &order_d, &order_link)
}

/// Ascending vertex tuple, for lexicographic comparisons.
fn lex_tuple(f: u64) -> Vec<usize> {
    bits::to_vec(f)
}

/// Leaf order: facets containing `pivot` first (lexicographically), then the
/// rest in ascending bitmask order.
fn pivot_leaf_order(k: &SimplicialComplex, pivot: usize) -> Vec<u64> {
    let mut with: Vec<u64> = k
        .facets()
        .iter()
        .copied()
        .filter(|&f| bits::has(f, pivot))
        .collect();
    with.sort_by_key(|&f| lex_tuple(f));
    let rest = k.facets().iter().copied().filter(|&f| !bits::has(f, pivot));
    with.extend(rest);
    with
}

/// Leaf order driven by the top vertex of each facet: facets sorted by the
/// top vertex's column (descending), then by whether the top pair is a full
/// column, a bottom vertex alone, or a top-row vertex, then lexicographically
/// or by bitmask within the group.
fn grouped_leaf_order(k: &SimplicialComplex) -> Vec<u64> {
    #[derive(PartialEq, Eq, PartialOrd, Ord)]
    enum Tail {
        Lex(Vec<usize>),
        Mask(u64),
    }
    let key = |f: u64| -> (std::cmp::Reverse<usize>, u8, Tail) {
        let t = bits::max(f);
        let col = t / 2;
        let bottom_row = t % 2 == 1;
        let rest = f & !bits::bit(t);
        let group = if bottom_row {
            let full_column = rest != 0 && bits::max(rest) == t - 1;
            if full_column {
                0
            } else {
                1
            }
        } else {
            2
        };
        let tail = if group == 0 {
            Tail::Lex(lex_tuple(f))
        } else {
            Tail::Mask(f)
        };
        (std::cmp::Reverse(col), group, tail)
    };
    let mut order = k.facets().to_vec();
    order.sort_by_key(|&f| key(f));
    order
}
