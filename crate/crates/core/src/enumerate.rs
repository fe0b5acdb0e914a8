//! Exhaustive instance generation: all lattices on a small carrier (up to
//! isomorphism when requested) and all commutator tables on a small lattice.
//!
//! Lattices are generated by adding elements in linear-extension order,
//! choosing a lower-cover antichain for each new element and pruning
//! prefixes in which some pair already lacks a meet; a finite poset with a
//! top in which every pair has a meet is a lattice. Each isomorphism class
//! is reached once per linear extension and deduplicated by canonical form.

use crate::commutator::CommutatorLattice;
use crate::lattice::{CanonicalForm, FiniteLattice};
use crate::set::ElemSet;
use std::collections::HashSet;
use thiserror::Error;

/// Known counts of lattices up to isomorphism on 1..=8 elements; the
/// contract for the canonical enumeration.
pub const LATTICE_COUNTS: [usize; 8] = [1, 1, 1, 2, 5, 15, 53, 222];

pub const MAX_LATTICE_N: usize = 8;
pub const MAX_TABLE_N: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("instance generation capped at {max}, requested {requested}")]
pub struct SizeTooLarge {
    pub requested: usize,
    pub max: usize,
}

/// All lattices with `n` elements; canonical means one representative per
/// isomorphism class, otherwise every linear-extension labeling is emitted.
pub fn enumerate_lattices(n: usize, canonical: bool) -> Result<Vec<FiniteLattice>, SizeTooLarge> {
    if n == 0 || n > MAX_LATTICE_N {
        return Err(SizeTooLarge { requested: n, max: MAX_LATTICE_N });
    }
    if n == 1 {
        return Ok(vec![FiniteLattice::chain(1)]);
    }
    let mut down: Vec<u64> = vec![1];
    let mut up: Vec<u64> = vec![1];
    let mut out: Vec<FiniteLattice> = Vec::new();
    let mut seen: HashSet<CanonicalForm> = HashSet::new();
    extend(n, &mut down, &mut up, &mut |down| {
        let labels = (0..n).map(|i| i.to_string()).collect();
        let ups: Vec<ElemSet> = (0..n)
            .map(|x| ElemSet::from_iter((0..n).filter(|&y| down[y] >> x & 1 == 1)))
            .collect();
        let lat = FiniteLattice::from_order(labels, ups).expect("generated order is a lattice");
        if canonical {
            if seen.insert(lat.canonical_form()) {
                out.push(lat);
            }
        } else {
            out.push(lat);
        }
    });
    if canonical {
        out.sort_by_key(|lat| lat.canonical_form());
    }
    Ok(out)
}

fn extend(n: usize, down: &mut Vec<u64>, up: &mut Vec<u64>, emit: &mut impl FnMut(&[u64])) {
    let j = down.len();
    if j == n {
        emit(down);
        return;
    }
    let last = j == n - 1;
    // lower covers: a non-empty antichain among the placed elements
    'cands: for covers_bits in 1u64..(1 << j) {
        let mut dj = 1u64 << j;
        for a in bits(covers_bits) {
            dj |= down[a];
            for b in bits(covers_bits) {
                if a != b && down[b] >> a & 1 == 1 {
                    continue 'cands;
                }
            }
        }
        if last && dj != (1 << n) - 1 {
            // the final element must close the order with a top
            continue;
        }
        // every existing element must have a meet with the new one: the
        // down-set intersection needs a unique maximal element
        for x in 0..j {
            let common = down[x] & dj;
            let mut maximal = None;
            for m in bits(common) {
                if up[m] & common == 1 << m && maximal.replace(m).is_some() {
                    continue 'cands;
                }
            }
        }
        down.push(dj);
        up.push(1 << j);
        for a in bits(dj & !(1 << j)) {
            up[a] |= 1 << j;
        }
        extend(n, down, up, emit);
        down.pop();
        up.pop();
        for a in up.iter_mut() {
            *a &= !(1u64 << j);
        }
    }
}

fn bits(mask: u64) -> impl Iterator<Item = usize> {
    (0..64).filter(move |i| mask >> i & 1 == 1)
}

/// Poset-filter oracle: every relation on a small carrier compatible with
/// the index order, filtered down to bounded lattices and deduplicated.
/// Independent of the incremental generator.
pub fn lattices_naive(n: usize) -> Vec<FiniteLattice> {
    assert!((1..=6).contains(&n), "oracle enumeration is for tiny carriers");
    if n == 1 {
        return vec![FiniteLattice::chain(1)];
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
        .collect();
    let mut seen: HashSet<CanonicalForm> = HashSet::new();
    let mut out = Vec::new();
    for rel_bits in 0u64..(1 << pairs.len()) {
        let mut up = vec![ElemSet::EMPTY; n];
        for (x, s) in up.iter_mut().enumerate() {
            s.insert(x);
        }
        for (k, &(i, j)) in pairs.iter().enumerate() {
            if rel_bits >> k & 1 == 1 {
                up[i].insert(j);
            }
        }
        // transitivity filter; reflexivity and antisymmetry hold by shape
        let transitive = (0..n).all(|x| up[x].iter().all(|y| up[y].is_subset(up[x])));
        if !transitive {
            continue;
        }
        let labels = (0..n).map(|i| i.to_string()).collect();
        if let Ok(lat) = FiniteLattice::from_order(labels, up) {
            if seen.insert(lat.canonical_form()) {
                out.push(lat);
            }
        }
    }
    out.sort_by_key(|lat| lat.canonical_form());
    out
}

/// All symmetric tables bounded by the meet, without the distributivity
/// filter; the raw candidate pool.
pub fn symmetric_bounded_tables(lat: &FiniteLattice) -> Vec<Vec<usize>> {
    let n = lat.n();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|x| (x..n).map(move |y| (x, y))).collect();
    let mut out = Vec::new();
    let mut table = vec![0usize; n * n];
    fill(lat, &pairs, 0, &mut table, &mut |t| out.push(t.to_vec()));
    out
}

fn fill(
    lat: &FiniteLattice,
    pairs: &[(usize, usize)],
    idx: usize,
    table: &mut Vec<usize>,
    emit: &mut impl FnMut(&[usize]),
) {
    if idx == pairs.len() {
        emit(table);
        return;
    }
    let (x, y) = pairs[idx];
    let n = lat.n();
    for v in lat.down_set(lat.meet(x, y)).iter() {
        table[x * n + y] = v;
        table[y * n + x] = v;
        fill(lat, pairs, idx + 1, table, emit);
    }
}

/// All valid commutator tables on a lattice, by backtracking over the
/// unordered pairs with incremental distributivity checks.
pub fn commutator_tables(lat: &FiniteLattice) -> Result<Vec<Vec<usize>>, SizeTooLarge> {
    let n = lat.n();
    if n > MAX_TABLE_N {
        return Err(SizeTooLarge { requested: n, max: MAX_TABLE_N });
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|x| (x..n).map(move |y| (x, y))).collect();
    let pair_index = |x: usize, y: usize| {
        let (a, b) = if x <= y { (x, y) } else { (y, x) };
        pairs.iter().position(|&p| p == (a, b)).unwrap()
    };
    // a distributivity instance becomes checkable once all three pairs are set
    let mut ready_at: Vec<Vec<(usize, usize, usize)>> = vec![Vec::new(); pairs.len()];
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let trigger = pair_index(a, lat.join(b, c))
                    .max(pair_index(a, b))
                    .max(pair_index(a, c));
                ready_at[trigger].push((a, b, c));
            }
        }
    }
    let mut out = Vec::new();
    let mut table = vec![usize::MAX; n * n];
    backtrack(lat, &pairs, &ready_at, 0, &mut table, &mut out);
    for t in &out {
        debug_assert!(CommutatorLattice::new(lat.clone(), t.clone()).is_ok());
    }
    Ok(out)
}

fn backtrack(
    lat: &FiniteLattice,
    pairs: &[(usize, usize)],
    ready_at: &[Vec<(usize, usize, usize)>],
    idx: usize,
    table: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if idx == pairs.len() {
        out.push(table.clone());
        return;
    }
    let (x, y) = pairs[idx];
    let n = lat.n();
    'values: for v in lat.down_set(lat.meet(x, y)).iter() {
        table[x * n + y] = v;
        table[y * n + x] = v;
        for &(a, b, c) in &ready_at[idx] {
            if table[a * n + lat.join(b, c)] != lat.join(table[a * n + b], table[a * n + c]) {
                continue 'values;
            }
        }
        backtrack(lat, pairs, ready_at, idx + 1, table, out);
    }
    table[x * n + y] = usize::MAX;
    table[y * n + x] = usize::MAX;
}

/// Full-filter oracle for tiny lattices: every symmetric meet-bounded table,
/// validated from scratch.
pub fn commutator_tables_naive(lat: &FiniteLattice) -> Vec<Vec<usize>> {
    assert!(lat.n() <= 3, "the naive table oracle is for three elements or fewer");
    symmetric_bounded_tables(lat)
        .into_iter()
        .filter(|t| CommutatorLattice::new(lat.clone(), t.clone()).is_ok())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_the_known_sequence() {
        for (i, &expected) in LATTICE_COUNTS.iter().enumerate().take(6) {
            let n = i + 1;
            assert_eq!(enumerate_lattices(n, true).unwrap().len(), expected, "n={n}");
        }
    }

    #[test]
    fn oracle_agrees_up_to_five() {
        for n in 1..=5 {
            let canonical = enumerate_lattices(n, true).unwrap();
            let naive = lattices_naive(n);
            assert_eq!(canonical.len(), naive.len(), "n={n}");
            let forms: Vec<_> = canonical.iter().map(|l| l.canonical_form()).collect();
            let naive_forms: Vec<_> = naive.iter().map(|l| l.canonical_form()).collect();
            assert_eq!(forms, naive_forms);
        }
    }

    #[test]
    fn canonical_list_is_duplicate_free() {
        let lats = enumerate_lattices(6, true).unwrap();
        for (i, a) in lats.iter().enumerate() {
            for b in &lats[i + 1..] {
                assert!(!a.is_isomorphic(b));
            }
        }
    }

    #[test]
    fn size_cap() {
        assert!(enumerate_lattices(9, true).is_err());
        assert!(commutator_tables(&FiniteLattice::boolean(3)).is_err());
    }

    #[test]
    fn two_chain_has_two_tables() {
        let tables = commutator_tables(&FiniteLattice::chain(2)).unwrap();
        assert_eq!(tables.len(), 2);
    }

    #[test]
    fn chain_tables_contain_the_named_variants() {
        let c3 = FiniteLattice::chain(3);
        let tables = commutator_tables(&c3).unwrap();
        let as_cl: Vec<CommutatorLattice> = tables
            .iter()
            .map(|t| CommutatorLattice::new(c3.clone(), t.clone()).unwrap())
            .collect();
        // the meet, the [a,a]=0 variant, and the [1,1]=a variant all occur
        assert!(as_cl.iter().any(|cl| cl.is_meet()));
        assert!(as_cl
            .iter()
            .any(|cl| cl.comm(1, 1) == 0 && cl.comm(1, 2) == 1 && cl.comm(2, 2) == 2));
        assert!(as_cl
            .iter()
            .any(|cl| cl.comm(2, 2) == 1 && cl.comm(1, 2) == 0 && cl.comm(1, 1) == 0));
        // backtracking agrees with the full-filter oracle
        assert_eq!(tables.len(), commutator_tables_naive(&c3).len());
        for n in 1..=2 {
            let lat = FiniteLattice::chain(n);
            assert_eq!(
                commutator_tables(&lat).unwrap().len(),
                commutator_tables_naive(&lat).len()
            );
        }
    }

    #[test]
    fn distributive_lattices_always_admit_the_meet() {
        for lat in enumerate_lattices(5, true).unwrap() {
            let tables = commutator_tables(&lat).unwrap();
            let has_meet = tables
                .iter()
                .any(|t| CommutatorLattice::new(lat.clone(), t.clone()).unwrap().is_meet());
            assert_eq!(has_meet, lat.is_distributive());
        }
    }
}
