//! Finite bounded lattices and the order-theoretic toolbox: irreducible
//! elements, principal ideals and filters, lattice congruences, quotients,
//! direct products, bounded sublattices, and canonical forms for isomorphism
//! tests.
//!
//! Elements are dense indices `0..n`; labels are display-only. Validity is
//! checked eagerly at construction, so every operation may assume a valid
//! lattice.

use crate::set::{ElemSet, MAX_ELEMS};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("cover relation contains a cycle through element {0}")]
    CyclicCovers(usize),
    #[error("poset has no {0}")]
    NoBounds(&'static str),
    #[error("elements {x} and {y} have no unique {kind}; extremal bounds: {witnesses:?}")]
    NotALattice {
        x: usize,
        y: usize,
        kind: BoundKind,
        witnesses: Vec<usize>,
    },
    #[error("carrier of size {0} exceeds the supported maximum {MAX_ELEMS}")]
    TooLarge(usize),
    #[error("empty carrier")]
    Empty,
    #[error("order relation is not {0}")]
    NotAPartialOrder(&'static str),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundKind {
    Meet,
    Join,
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundKind::Meet => write!(f, "meet"),
            BoundKind::Join => write!(f, "join"),
        }
    }
}

/// A finite bounded lattice: carrier `0..n`, order and operation tables,
/// bottom and top.
#[derive(Clone)]
pub struct FiniteLattice {
    n: usize,
    labels: Vec<String>,
    /// `up[x]` = set of `y` with `x <= y` (includes `x`).
    up: Vec<ElemSet>,
    /// `down[x]` = set of `y` with `y <= x` (includes `x`).
    down: Vec<ElemSet>,
    meet: Vec<u8>,
    join: Vec<u8>,
    bottom: usize,
    top: usize,
}

impl fmt::Debug for FiniteLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteLattice(n={}, covers={:?})", self.n, self.covers())
    }
}

impl FiniteLattice {
    /// Builds the lattice whose order is the reflexive-transitive closure of
    /// `covers`. Fails if the covers are cyclic, bounds are missing, or some
    /// pair lacks a unique meet or join.
    pub fn from_covers(labels: Vec<String>, covers: &[(usize, usize)]) -> Result<Self, LatticeError> {
        let n = labels.len();
        if n == 0 {
            return Err(LatticeError::Empty);
        }
        if n > MAX_ELEMS {
            return Err(LatticeError::TooLarge(n));
        }
        let mut up = vec![ElemSet::EMPTY; n];
        for (x, s) in up.iter_mut().enumerate() {
            s.insert(x);
        }
        for &(lo, hi) in covers {
            assert!(lo < n && hi < n, "cover index out of range");
            up[lo].insert(hi);
        }
        // transitive closure (Warshall on bitmasks)
        for _ in 0..n {
            let mut changed = false;
            for x in 0..n {
                let mut acc = up[x];
                for y in up[x].iter() {
                    acc = acc | up[y];
                }
                if acc != up[x] {
                    up[x] = acc;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        // acyclicity: x <= y and y <= x forces x = y
        for x in 0..n {
            for y in up[x].iter() {
                if y != x && up[y].contains(x) {
                    return Err(LatticeError::CyclicCovers(x));
                }
            }
        }
        Self::from_order(labels, up)
    }

    /// Builds a lattice from a full order relation given as up-sets.
    /// Checks the partial-order axioms, locates bounds, and computes the
    /// meet and join tables, reporting a witness set when a pair has no
    /// unique bound.
    pub fn from_order(labels: Vec<String>, up: Vec<ElemSet>) -> Result<Self, LatticeError> {
        let n = labels.len();
        if n == 0 {
            return Err(LatticeError::Empty);
        }
        if n > MAX_ELEMS {
            return Err(LatticeError::TooLarge(n));
        }
        assert_eq!(up.len(), n);
        let carrier = ElemSet::full(n);
        for (x, &s) in up.iter().enumerate() {
            if !s.contains(x) {
                return Err(LatticeError::NotAPartialOrder("reflexive"));
            }
            if !s.is_subset(carrier) {
                return Err(LatticeError::NotAPartialOrder("within the carrier"));
            }
        }
        for x in 0..n {
            for y in up[x].iter() {
                if y != x && up[y].contains(x) {
                    return Err(LatticeError::NotAPartialOrder("antisymmetric"));
                }
                if !up[y].is_subset(up[x]) {
                    return Err(LatticeError::NotAPartialOrder("transitive"));
                }
            }
        }
        let mut down = vec![ElemSet::EMPTY; n];
        for x in 0..n {
            for y in up[x].iter() {
                down[y].insert(x);
            }
        }
        let bottom = (0..n)
            .find(|&x| up[x] == carrier)
            .ok_or(LatticeError::NoBounds("bottom"))?;
        let top = (0..n)
            .find(|&x| down[x] == carrier)
            .ok_or(LatticeError::NoBounds("top"))?;

        let mut meet = vec![0u8; n * n];
        let mut join = vec![0u8; n * n];
        for x in 0..n {
            for y in x..n {
                let m = greatest(&up, down[x] & down[y]).ok_or_else(|| LatticeError::NotALattice {
                    x,
                    y,
                    kind: BoundKind::Meet,
                    witnesses: maximals(&up, down[x] & down[y]),
                })?;
                let j = least(&down, up[x] & up[y]).ok_or_else(|| LatticeError::NotALattice {
                    x,
                    y,
                    kind: BoundKind::Join,
                    witnesses: minimals(&down, up[x] & up[y]),
                })?;
                meet[x * n + y] = m as u8;
                meet[y * n + x] = m as u8;
                join[x * n + y] = j as u8;
                join[y * n + x] = j as u8;
            }
        }
        Ok(FiniteLattice { n, labels, up, down, meet, join, bottom, top })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn carrier(&self) -> ElemSet {
        ElemSet::full(self.n)
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.up[x].contains(y)
    }

    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.meet[x * self.n + y] as usize
    }

    pub fn join(&self, x: usize, y: usize) -> usize {
        self.join[x * self.n + y] as usize
    }

    /// Principal filter `[x)`.
    pub fn up_set(&self, x: usize) -> ElemSet {
        self.up[x]
    }

    /// Principal ideal `(x]`.
    pub fn down_set(&self, x: usize) -> ElemSet {
        self.down[x]
    }

    /// Join of an arbitrary subset; the empty join is the bottom.
    pub fn join_set(&self, u: ElemSet) -> usize {
        u.iter().fold(self.bottom, |acc, x| self.join(acc, x))
    }

    /// Meet of an arbitrary subset; the empty meet is the top.
    pub fn meet_set(&self, u: ElemSet) -> usize {
        u.iter().fold(self.top, |acc, x| self.meet(acc, x))
    }

    /// Maximum of the ideal generated by `u`: on a finite carrier the
    /// generated ideal is principal, `(u] = (join u]`.
    pub fn generated_ideal(&self, u: ElemSet) -> usize {
        self.join_set(u)
    }

    /// Minimum of the filter generated by `u`.
    pub fn generated_filter(&self, u: ElemSet) -> usize {
        self.meet_set(u)
    }

    /// The generated ideal as an element set.
    pub fn ideal_closure(&self, u: ElemSet) -> ElemSet {
        self.down[self.join_set(u)]
    }

    pub fn is_down_closed(&self, s: ElemSet) -> bool {
        s.iter().all(|x| self.down[x].is_subset(s))
    }

    /// An ideal is a non-empty down-closed join-closed set; on a finite
    /// carrier that is exactly a principal ideal.
    pub fn is_ideal(&self, s: ElemSet) -> bool {
        !s.is_empty() && s == self.down[self.join_set(s)]
    }

    /// Distributive law over all triples.
    pub fn is_distributive(&self) -> bool {
        for x in 0..self.n {
            for y in 0..self.n {
                for z in 0..self.n {
                    if self.meet(x, self.join(y, z)) != self.join(self.meet(x, y), self.meet(x, z)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Modular law (`x <= z` implies `x v (y ^ z) = (x v y) ^ z`) over all triples.
    pub fn is_modular(&self) -> bool {
        for x in 0..self.n {
            for z in self.up[x].iter() {
                for y in 0..self.n {
                    if self.join(x, self.meet(y, z)) != self.meet(self.join(x, y), z) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Pentagon detection: a pair `x < z` with some `y` satisfying
    /// `x ^ y = z ^ y` and `x v y = z v y`. Present iff the lattice is
    /// non-modular; kept as an independent route for `is_modular`.
    pub fn contains_pentagon(&self) -> bool {
        for x in 0..self.n {
            for z in self.up[x].iter() {
                if z == x {
                    continue;
                }
                for y in 0..self.n {
                    if self.meet(x, y) == self.meet(z, y) && self.join(x, y) == self.join(z, y) {
                        return true;
                    }
                }
            }
        }
        false
    }

    /// Diamond detection: three pairwise-incomparable elements with equal
    /// pairwise meets and equal pairwise joins. A modular lattice is
    /// non-distributive iff it contains a diamond.
    pub fn contains_diamond(&self) -> bool {
        for a in 0..self.n {
            for b in a + 1..self.n {
                if self.leq(a, b) || self.leq(b, a) {
                    continue;
                }
                let (m, j) = (self.meet(a, b), self.join(a, b));
                for c in b + 1..self.n {
                    if self.leq(a, c) || self.leq(c, a) || self.leq(b, c) || self.leq(c, b) {
                        continue;
                    }
                    if self.meet(a, c) == m
                        && self.meet(b, c) == m
                        && self.join(a, c) == j
                        && self.join(b, c) == j
                    {
                        return true;
                    }
                }
            }
        }
        false
    }

    /// Lower covers of `x` (maximal elements strictly below).
    pub fn lower_covers(&self, x: usize) -> ElemSet {
        let strict = self.down[x].without(x);
        ElemSet::from_iter(
            strict
                .iter()
                .filter(|&y| (self.up[y] & strict) == ElemSet::single(y)),
        )
    }

    /// Upper covers of `x`.
    pub fn upper_covers(&self, x: usize) -> ElemSet {
        let strict = self.up[x].without(x);
        ElemSet::from_iter(
            strict
                .iter()
                .filter(|&y| (self.down[y] & strict) == ElemSet::single(y)),
        )
    }

    /// The Hasse diagram as a list of cover pairs `(lower, upper)`.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.n {
            for y in self.upper_covers(x).iter() {
                out.push((x, y));
            }
        }
        out
    }

    /// Meet-irreducible, strictly meet-irreducible, maximal, and compact
    /// elements. On a finite carrier every element is compact.
    pub fn irreducibles(&self) -> Irreducibles {
        let mut mi = ElemSet::EMPTY;
        let mut smi = ElemSet::EMPTY;
        let mut maximal = ElemSet::EMPTY;
        let mut successor = vec![None; self.n];
        for x in 0..self.n {
            let mut irreducible = true;
            'outer: for a in 0..self.n {
                for b in 0..self.n {
                    if self.meet(a, b) == x && a != x && b != x {
                        irreducible = false;
                        break 'outer;
                    }
                }
            }
            if irreducible {
                mi.insert(x);
            }
            let covers = self.upper_covers(x);
            if x != self.top && covers.len() == 1 {
                // unique upper cover: x is the meet of everything strictly above
                smi.insert(x);
                successor[x] = covers.min_elem();
            }
            if x != self.top && covers == ElemSet::single(self.top) {
                maximal.insert(x);
            }
        }
        Irreducibles {
            mi,
            smi,
            maximal,
            compact: self.carrier(),
            successor,
        }
    }

    /// Least congruence containing all given pairs, computed by closure
    /// under the lattice operations.
    pub fn congruence_generated(&self, pairs: &[(usize, usize)]) -> LatticeCongruence {
        let mut uf = UnionFind::new(self.n);
        for &(a, b) in pairs {
            uf.union(a, b);
        }
        loop {
            let mut changed = false;
            for x in 0..self.n {
                for y in x + 1..self.n {
                    if uf.find(x) != uf.find(y) {
                        continue;
                    }
                    for c in 0..self.n {
                        changed |= uf.union(self.meet(x, c), self.meet(y, c));
                        changed |= uf.union(self.join(x, c), self.join(y, c));
                    }
                }
            }
            if !changed {
                break;
            }
        }
        let block_of: Vec<usize> = (0..self.n).map(|x| uf.find(x)).collect();
        LatticeCongruence::from_raw_classes(self, &block_of)
    }

    /// All congruences, as the join-closure of the principal congruences.
    pub fn congruences(&self) -> Vec<LatticeCongruence> {
        let delta = LatticeCongruence::delta(self.n);
        let mut principals: Vec<LatticeCongruence> = Vec::new();
        for a in 0..self.n {
            for b in a + 1..self.n {
                let cg = self.congruence_generated(&[(a, b)]);
                if !principals.contains(&cg) {
                    principals.push(cg);
                }
            }
        }
        let mut all = vec![delta];
        let mut frontier = all.clone();
        while let Some(theta) = frontier.pop() {
            for p in &principals {
                let joined = self.congruence_join(&theta, p);
                if !all.contains(&joined) {
                    all.push(joined.clone());
                    frontier.push(joined);
                }
            }
        }
        all.sort_by(|a, b| a.block_of.cmp(&b.block_of));
        all
    }

    /// Join in the congruence lattice: the congruence generated by the
    /// union of the two relations.
    pub fn congruence_join(&self, a: &LatticeCongruence, b: &LatticeCongruence) -> LatticeCongruence {
        let mut pairs = Vec::new();
        for blocks in [&a.blocks, &b.blocks] {
            for blk in blocks.iter() {
                let mut it = blk.iter();
                if let Some(first) = it.next() {
                    for x in it {
                        pairs.push((first, x));
                    }
                }
            }
        }
        self.congruence_generated(&pairs)
    }

    /// Naive congruence enumeration over all set partitions; the oracle for
    /// the closure-based route. Only sensible for small carriers.
    pub fn congruences_naive(&self) -> Vec<LatticeCongruence> {
        assert!(self.n <= 10, "naive partition enumeration is for small carriers");
        let mut out = Vec::new();
        let mut assignment = vec![0usize; self.n];
        self.partitions_rec(1, &mut assignment, &mut out);
        out.sort_by(|a, b| a.block_of.cmp(&b.block_of));
        out
    }

    fn partitions_rec(&self, idx: usize, assignment: &mut Vec<usize>, out: &mut Vec<LatticeCongruence>) {
        if idx == self.n {
            if self.is_compatible_partition(assignment) {
                out.push(LatticeCongruence::from_raw_classes(self, assignment));
            }
            return;
        }
        let max_block = *assignment[..idx].iter().max().unwrap();
        for b in 0..=max_block + 1 {
            assignment[idx] = b;
            self.partitions_rec(idx + 1, assignment, out);
        }
    }

    fn is_compatible_partition(&self, block_of: &[usize]) -> bool {
        for x in 0..self.n {
            for y in x + 1..self.n {
                if block_of[x] != block_of[y] {
                    continue;
                }
                for c in 0..self.n {
                    if block_of[self.meet(x, c)] != block_of[self.meet(y, c)]
                        || block_of[self.join(x, c)] != block_of[self.join(y, c)]
                    {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Quotient lattice and the canonical projection. The projection is
    /// asserted post hoc to be a surjective bounded-lattice morphism.
    pub fn quotient(&self, theta: &LatticeCongruence) -> (FiniteLattice, Vec<usize>) {
        let blocks = &theta.blocks;
        let k = blocks.len();
        let proj = theta.block_of.clone();
        let mut up = vec![ElemSet::EMPTY; k];
        for (i, bi) in blocks.iter().enumerate() {
            let x = bi.min_elem().unwrap();
            for (j, bj) in blocks.iter().enumerate() {
                let y = bj.min_elem().unwrap();
                // x/theta <= y/theta iff x ^ y lies in x's block
                if proj[self.meet(x, y)] == i {
                    up[i].insert(j);
                }
            }
        }
        let labels = blocks
            .iter()
            .map(|b| {
                let names: Vec<&str> = b.iter().map(|x| self.label(x)).collect();
                format!("{{{}}}", names.join(" "))
            })
            .collect();
        let q = FiniteLattice::from_order(labels, up).expect("quotient of a congruence is a lattice");
        for x in 0..self.n {
            for y in 0..self.n {
                debug_assert_eq!(proj[self.meet(x, y)], q.meet(proj[x], proj[y]));
                debug_assert_eq!(proj[self.join(x, y)], q.join(proj[x], proj[y]));
            }
        }
        assert_eq!(proj[self.bottom], q.bottom);
        assert_eq!(proj[self.top], q.top);
        (q, proj)
    }

    /// Least and greatest element of the congruence class of `x`; both exist
    /// on a finite carrier.
    pub fn class_extrema(&self, theta: &LatticeCongruence, x: usize) -> (usize, usize) {
        let block = theta.blocks[theta.block_of[x]];
        let mut lo = x;
        let mut hi = x;
        for y in block.iter() {
            lo = self.meet(lo, y);
            hi = self.join(hi, y);
        }
        debug_assert!(block.contains(lo) && block.contains(hi));
        (lo, hi)
    }

    /// Componentwise direct product. The second value maps a product index
    /// to its coordinate pair.
    pub fn direct_product(&self, other: &FiniteLattice) -> (FiniteLattice, Vec<(usize, usize)>) {
        let n = self.n * other.n;
        assert!(n <= MAX_ELEMS, "product carrier too large");
        let mut labels = Vec::with_capacity(n);
        let mut coords = Vec::with_capacity(n);
        for i in 0..self.n {
            for j in 0..other.n {
                labels.push(format!("({},{})", self.label(i), other.label(j)));
                coords.push((i, j));
            }
        }
        let mut up = vec![ElemSet::EMPTY; n];
        for (p, &(i, j)) in coords.iter().enumerate() {
            for (q, &(k, l)) in coords.iter().enumerate() {
                if self.leq(i, k) && other.leq(j, l) {
                    up[p].insert(q);
                }
            }
        }
        let lat = FiniteLattice::from_order(labels, up).expect("product of lattices is a lattice");
        (lat, coords)
    }

    /// All subsets containing bottom and top that are closed under meet and
    /// join.
    pub fn bounded_sublattices(&self) -> Vec<ElemSet> {
        let interior = self.carrier().without(self.bottom).without(self.top);
        let base = ElemSet::single(self.bottom).with(self.top);
        let mut out = Vec::new();
        for sub in interior.subsets() {
            let s = sub | base;
            if self.is_closed_sublattice(s) {
                out.push(s);
            }
        }
        out
    }

    pub fn is_closed_sublattice(&self, s: ElemSet) -> bool {
        for x in s.iter() {
            for y in s.iter() {
                if !s.contains(self.meet(x, y)) || !s.contains(self.join(x, y)) {
                    return false;
                }
            }
        }
        true
    }

    /// The induced lattice on a meet/join-closed subset containing both
    /// bounds. Returns the lattice and the list mapping new indices to old.
    pub fn sublattice(&self, members: ElemSet) -> (FiniteLattice, Vec<usize>) {
        assert!(members.contains(self.bottom) && members.contains(self.top));
        assert!(self.is_closed_sublattice(members));
        let elems: Vec<usize> = members.iter().collect();
        let index_of = |x: usize| elems.iter().position(|&e| e == x).unwrap();
        let labels = elems.iter().map(|&e| self.label(e).to_string()).collect();
        let mut up = vec![ElemSet::EMPTY; elems.len()];
        for (i, &x) in elems.iter().enumerate() {
            for &y in &elems {
                if self.leq(x, y) {
                    up[i].insert(index_of(y));
                }
            }
        }
        let lat = FiniteLattice::from_order(labels, up).expect("closed subset is a lattice");
        for (i, &x) in elems.iter().enumerate() {
            for (j, &y) in elems.iter().enumerate() {
                debug_assert_eq!(elems[lat.meet(i, j)], self.meet(x, y));
                debug_assert_eq!(elems[lat.join(i, j)], self.join(x, y));
            }
        }
        (lat, elems)
    }

    /// A lattice is 0-regular when distinct congruences have distinct
    /// 0-classes.
    pub fn is_0_regular(&self) -> bool {
        let congruences = self.congruences();
        let mut seen: Vec<ElemSet> = Vec::new();
        for theta in &congruences {
            let zero_class = theta.blocks[theta.block_of[self.bottom]];
            if seen.contains(&zero_class) {
                return false;
            }
            seen.push(zero_class);
        }
        true
    }

    /// Order dual: same carrier, reversed order.
    pub fn dual(&self) -> FiniteLattice {
        FiniteLattice {
            n: self.n,
            labels: self.labels.clone(),
            up: self.down.clone(),
            down: self.up.clone(),
            meet: self.join.clone(),
            join: self.meet.clone(),
            bottom: self.top,
            top: self.bottom,
        }
    }

    /// Canonical form of the order relation; bit-identical for isomorphic
    /// lattices. Computed as the minimum relabeled relation over all
    /// permutations that respect an iterated structural-invariant partition
    /// of the carrier.
    pub fn canonical_form(&self) -> CanonicalForm {
        // invariant refinement: start from degree/height data, then fold in
        // the sorted invariant ranks of covers until the partition stabilizes
        let mut key: Vec<Vec<u64>> = (0..self.n)
            .map(|x| {
                vec![
                    self.down[x].len() as u64,
                    self.up[x].len() as u64,
                    self.lower_covers(x).len() as u64,
                    self.upper_covers(x).len() as u64,
                ]
            })
            .collect();
        loop {
            let rank = rank_by_key(&key);
            let mut next: Vec<Vec<u64>> = Vec::with_capacity(self.n);
            for x in 0..self.n {
                let mut k = key[x].clone();
                let mut lo: Vec<u64> = self.lower_covers(x).iter().map(|y| rank[y]).collect();
                let mut hi: Vec<u64> = self.upper_covers(x).iter().map(|y| rank[y]).collect();
                lo.sort_unstable();
                hi.sort_unstable();
                k.push(u64::MAX);
                k.extend(lo);
                k.push(u64::MAX);
                k.extend(hi);
                next.push(k);
            }
            let new_rank = rank_by_key(&next);
            let stable = rank_by_key(&key) == new_rank;
            key = next;
            if stable {
                break;
            }
        }
        // order positions by invariant class; the first key component is
        // |down(x)|, so any class-respecting assignment is a linear extension
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by(|&a, &b| key[a].cmp(&key[b]).then(a.cmp(&b)));
        let classes: Vec<Vec<usize>> = {
            let mut cs: Vec<Vec<usize>> = Vec::new();
            for &x in &order {
                match cs.last_mut() {
                    Some(c) if key[c[0]] == key[x] => c.push(x),
                    _ => cs.push(vec![x]),
                }
            }
            cs
        };
        let mut best: Option<Vec<u128>> = None;
        let mut position_of = vec![usize::MAX; self.n];
        self.search_canonical(&classes, 0, &mut position_of, 0, &mut best);
        CanonicalForm(best.expect("at least one labeling"))
    }

    fn search_canonical(
        &self,
        classes: &[Vec<usize>],
        class_idx: usize,
        position_of: &mut Vec<usize>,
        placed: usize,
        best: &mut Option<Vec<u128>>,
    ) {
        if class_idx == classes.len() {
            let code = self.relabeled_code(position_of);
            if best.as_ref().is_none_or(|b| code < *b) {
                *best = Some(code);
            }
            return;
        }
        let class = &classes[class_idx];
        let mut perm: Vec<usize> = class.clone();
        permute_all(&mut perm, 0, &mut |p| {
            for (offset, &x) in p.iter().enumerate() {
                position_of[x] = placed + offset;
            }
            self.search_canonical(classes, class_idx + 1, position_of, placed + p.len(), best);
        });
    }

    fn relabeled_code(&self, position_of: &[usize]) -> Vec<u128> {
        let mut rows = vec![0u128; self.n];
        for x in 0..self.n {
            let mut row = 0u128;
            for y in self.up[x].iter() {
                row |= 1u128 << position_of[y];
            }
            rows[position_of[x]] = row;
        }
        rows
    }

    pub fn is_isomorphic(&self, other: &FiniteLattice) -> bool {
        self.n == other.n && self.canonical_form() == other.canonical_form()
    }

    // --- stock constructions -------------------------------------------

    /// Chain with `n` elements.
    pub fn chain(n: usize) -> FiniteLattice {
        let labels = (0..n).map(|i| i.to_string()).collect();
        let covers: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
        FiniteLattice::from_covers(labels, &covers).unwrap()
    }

    /// The diamond M3: bottom, three incomparable atoms, top.
    pub fn diamond() -> FiniteLattice {
        let labels = ["0", "a", "b", "c", "1"].map(String::from).to_vec();
        FiniteLattice::from_covers(labels, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)]).unwrap()
    }

    /// The pentagon N5: 0 < a < c < 1 and 0 < b < 1.
    pub fn pentagon() -> FiniteLattice {
        let labels = ["0", "a", "b", "c", "1"].map(String::from).to_vec();
        FiniteLattice::from_covers(labels, &[(0, 1), (0, 2), (1, 3), (3, 4), (2, 4)]).unwrap()
    }

    /// Boolean lattice with `2^k` elements, as a product of 2-chains.
    pub fn boolean(k: usize) -> FiniteLattice {
        let mut lat = FiniteLattice::chain(if k == 0 { 1 } else { 2 });
        for _ in 1..k {
            lat = lat.direct_product(&FiniteLattice::chain(2)).0;
        }
        lat
    }

    /// Divisors of `n` ordered by divisibility (meet = gcd, join = lcm).
    pub fn divisors(n: u64) -> FiniteLattice {
        assert!(n >= 1);
        let divs: Vec<u64> = (1..=n).filter(|d| n.is_multiple_of(*d)).collect();
        let labels = divs.iter().map(|d| d.to_string()).collect();
        let mut up = vec![ElemSet::EMPTY; divs.len()];
        for (i, &a) in divs.iter().enumerate() {
            for (j, &b) in divs.iter().enumerate() {
                if b % a == 0 {
                    up[i].insert(j);
                }
            }
        }
        FiniteLattice::from_order(labels, up).unwrap()
    }
}

fn rank_by_key(key: &[Vec<u64>]) -> Vec<u64> {
    let mut sorted: Vec<&Vec<u64>> = key.iter().collect();
    sorted.sort();
    sorted.dedup();
    key.iter()
        .map(|k| sorted.binary_search(&k).unwrap() as u64)
        .collect()
}

fn permute_all(items: &mut Vec<usize>, start: usize, visit: &mut impl FnMut(&[usize])) {
    if start == items.len() {
        visit(items);
        return;
    }
    for i in start..items.len() {
        items.swap(start, i);
        permute_all(items, start + 1, visit);
        items.swap(start, i);
    }
}

fn maximals(up: &[ElemSet], s: ElemSet) -> Vec<usize> {
    s.iter().filter(|&m| (up[m] & s) == ElemSet::single(m)).collect()
}

fn minimals(down: &[ElemSet], s: ElemSet) -> Vec<usize> {
    s.iter().filter(|&m| (down[m] & s) == ElemSet::single(m)).collect()
}

fn greatest(up: &[ElemSet], s: ElemSet) -> Option<usize> {
    let m = maximals(up, s);
    match m.as_slice() {
        [only] if s.iter().all(|x| up[x].contains(*only)) => Some(*only),
        _ => None,
    }
}

fn least(down: &[ElemSet], s: ElemSet) -> Option<usize> {
    let m = minimals(down, s);
    match m.as_slice() {
        [only] if s.iter().all(|x| down[x].contains(*only)) => Some(*only),
        _ => None,
    }
}

/// Irreducible-element data of a finite bounded lattice.
#[derive(Debug, Clone)]
pub struct Irreducibles {
    /// Meet-irreducible elements (`x = a ^ b` forces `x ∈ {a, b}`).
    pub mi: ElemSet,
    /// Strictly meet-irreducible elements: a unique upper cover exists.
    /// The top is never strictly meet-irreducible.
    pub smi: ElemSet,
    /// Maximal elements of the carrier without its top.
    pub maximal: ElemSet,
    /// Compact elements; the whole carrier on a finite lattice.
    pub compact: ElemSet,
    /// For each strictly meet-irreducible element, its unique successor.
    pub successor: Vec<Option<usize>>,
}

/// A lattice congruence, stored as a normalized partition (blocks ordered by
/// their least element).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LatticeCongruence {
    block_of: Vec<usize>,
    blocks: Vec<ElemSet>,
}

impl fmt::Debug for LatticeCongruence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Congruence{:?}", self.blocks)
    }
}

impl LatticeCongruence {
    /// Identity congruence.
    pub fn delta(n: usize) -> LatticeCongruence {
        LatticeCongruence {
            block_of: (0..n).collect(),
            blocks: (0..n).map(ElemSet::single).collect(),
        }
    }

    /// Total congruence.
    pub fn nabla(n: usize) -> LatticeCongruence {
        LatticeCongruence {
            block_of: vec![0; n],
            blocks: vec![ElemSet::full(n)],
        }
    }

    /// Normalizes an arbitrary class assignment into a congruence value.
    /// Callers must pass a class map that already satisfies compatibility;
    /// `new` is the checked entry point.
    pub(crate) fn from_raw_classes(lat: &FiniteLattice, class_of: &[usize]) -> LatticeCongruence {
        let n = lat.n();
        let mut block_ids: Vec<usize> = Vec::new();
        let mut block_of = vec![usize::MAX; n];
        let mut blocks: Vec<ElemSet> = Vec::new();
        for x in 0..n {
            let class = class_of[x];
            match block_ids.iter().position(|&c| c == class) {
                Some(b) => {
                    block_of[x] = b;
                    blocks[b].insert(x);
                }
                None => {
                    block_ids.push(class);
                    block_of[x] = blocks.len();
                    blocks.push(ElemSet::single(x));
                }
            }
        }
        LatticeCongruence { block_of, blocks }
    }

    /// Validates a class assignment as a lattice congruence of `lat`:
    /// compatibility with meet and join, plus the derived convexity of each
    /// block.
    pub fn new(lat: &FiniteLattice, class_of: &[usize]) -> Result<LatticeCongruence, CongruenceError> {
        assert_eq!(class_of.len(), lat.n());
        if !lat.is_compatible_partition(class_of) {
            return Err(CongruenceError::NotCompatible);
        }
        let theta = LatticeCongruence::from_raw_classes(lat, class_of);
        for (b, block) in theta.blocks.iter().enumerate() {
            let (lo, hi) = lat.class_extrema(&theta, block.min_elem().unwrap());
            let interval = lat.up_set(lo) & lat.down_set(hi);
            if *block != interval {
                return Err(CongruenceError::BlockNotConvex { block: b });
            }
        }
        Ok(theta)
    }

    /// Builds a congruence from explicit blocks.
    pub fn from_blocks(lat: &FiniteLattice, blocks: &[ElemSet]) -> Result<LatticeCongruence, CongruenceError> {
        let mut class_of = vec![usize::MAX; lat.n()];
        for (b, block) in blocks.iter().enumerate() {
            for x in block.iter() {
                if x >= lat.n() || class_of[x] != usize::MAX {
                    return Err(CongruenceError::NotAPartition);
                }
                class_of[x] = b;
            }
        }
        if class_of.contains(&usize::MAX) {
            return Err(CongruenceError::NotAPartition);
        }
        LatticeCongruence::new(lat, &class_of)
    }

    pub fn block_of(&self, x: usize) -> usize {
        self.block_of[x]
    }

    pub fn block(&self, x: usize) -> ElemSet {
        self.blocks[self.block_of[x]]
    }

    pub fn blocks(&self) -> &[ElemSet] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_delta(&self) -> bool {
        self.blocks.len() == self.block_of.len()
    }

    pub fn related(&self, x: usize, y: usize) -> bool {
        self.block_of[x] == self.block_of[y]
    }

    /// Refines: every block of `self` is contained in a block of `other`.
    pub fn is_refinement_of(&self, other: &LatticeCongruence) -> bool {
        self.blocks
            .iter()
            .all(|b| b.is_subset(other.blocks[other.block_of[b.min_elem().unwrap()]]))
    }

    /// Intersection of two congruences (always a congruence).
    pub fn intersect(&self, other: &LatticeCongruence) -> LatticeCongruence {
        let n = self.block_of.len();
        let class_of: Vec<usize> = (0..n)
            .map(|x| self.block_of[x] * (other.blocks.len() + 1) + other.block_of[x])
            .collect();
        let mut block_ids: Vec<usize> = Vec::new();
        let mut block_of = vec![usize::MAX; n];
        let mut blocks: Vec<ElemSet> = Vec::new();
        for x in 0..n {
            match block_ids.iter().position(|&c| c == class_of[x]) {
                Some(b) => {
                    block_of[x] = b;
                    blocks[b].insert(x);
                }
                None => {
                    block_ids.push(class_of[x]);
                    block_of[x] = blocks.len();
                    blocks.push(ElemSet::single(x));
                }
            }
        }
        LatticeCongruence { block_of, blocks }
    }

    /// Image of an element set under the projection, as a set of block ids.
    pub fn project_set(&self, s: ElemSet) -> ElemSet {
        ElemSet::from_iter(s.iter().map(|x| self.block_of[x]))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CongruenceError {
    #[error("blocks do not partition the carrier")]
    NotAPartition,
    #[error("partition is not compatible with meet and join")]
    NotCompatible,
    #[error("block {block} is not a convex sublattice")]
    BlockNotConvex { block: usize },
}

/// Canonical relabeled order relation; equal iff the lattices are isomorphic.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(pub Vec<u128>);

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> UnionFind {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    /// Returns true when two previously distinct classes were merged.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            false
        } else {
            self.parent[ra.max(rb)] = ra.min(rb);
            true
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c3() -> FiniteLattice {
        FiniteLattice::chain(3)
    }

    /// Direct greatest-lower-bound / least-upper-bound check from the order
    /// relation alone, independent of the table construction.
    fn assert_tables_are_bounds(lat: &FiniteLattice) {
        for x in lat.elements() {
            for y in lat.elements() {
                let m = lat.meet(x, y);
                assert!(lat.leq(m, x) && lat.leq(m, y));
                for z in lat.elements() {
                    if lat.leq(z, x) && lat.leq(z, y) {
                        assert!(lat.leq(z, m), "{z} is a lower bound of ({x},{y}) above meet {m}");
                    }
                }
                let j = lat.join(x, y);
                assert!(lat.leq(x, j) && lat.leq(y, j));
                for z in lat.elements() {
                    if lat.leq(x, z) && lat.leq(y, z) {
                        assert!(lat.leq(j, z));
                    }
                }
            }
        }
    }

    #[test]
    fn chain_meet_join_are_min_max() {
        let lat = c3();
        for x in 0..3 {
            for y in 0..3 {
                assert_eq!(lat.meet(x, y), x.min(y));
                assert_eq!(lat.join(x, y), x.max(y));
            }
        }
        assert_tables_are_bounds(&lat);
    }

    #[test]
    fn diamond_bounds_check_all_pairs() {
        let m3 = FiniteLattice::diamond();
        assert_eq!(m3.n(), 5);
        assert_tables_are_bounds(&m3);
        assert_eq!(m3.bottom(), 0);
        assert_eq!(m3.top(), 4);
    }

    #[test]
    fn bowtie_has_no_bounds() {
        let labels = ["0", "a", "b", "c"].map(String::from).to_vec();
        let err = FiniteLattice::from_covers(labels, &[(0, 1), (0, 2)]).unwrap_err();
        assert!(matches!(err, LatticeError::NoBounds(_)));
    }

    #[test]
    fn cyclic_covers_rejected() {
        let labels = ["a", "b"].map(String::from).to_vec();
        let err = FiniteLattice::from_covers(labels, &[(0, 1), (1, 0)]).unwrap_err();
        assert!(matches!(err, LatticeError::CyclicCovers(_)));
    }

    #[test]
    fn non_lattice_poset_reports_witnesses() {
        // 0 < a, b < c, d with no meet for (c, d): maximal lower bounds a and b
        let labels = ["0", "a", "b", "c", "d", "1"].map(String::from).to_vec();
        let err = FiniteLattice::from_covers(
            labels,
            &[(0, 1), (0, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 5), (4, 5)],
        )
        .unwrap_err();
        match err {
            LatticeError::NotALattice { witnesses, .. } => {
                assert_eq!(witnesses.len(), 2);
            }
            other => panic!("expected NotALattice, got {other:?}"),
        }
    }

    #[test]
    fn distributivity_and_modularity_brute_force() {
        assert!(c3().is_distributive());
        assert!(c3().is_modular());
        let m3 = FiniteLattice::diamond();
        assert!(!m3.is_distributive());
        assert!(m3.is_modular());
        let n5 = FiniteLattice::pentagon();
        assert!(!n5.is_modular());
        assert!(!n5.is_distributive());
    }

    #[test]
    fn law_route_agrees_with_sublattice_route() {
        for lat in [
            FiniteLattice::chain(1),
            FiniteLattice::chain(4),
            FiniteLattice::diamond(),
            FiniteLattice::pentagon(),
            FiniteLattice::boolean(3),
            FiniteLattice::divisors(12),
            FiniteLattice::diamond().direct_product(&FiniteLattice::chain(2)).0,
        ] {
            assert_eq!(lat.is_modular(), !lat.contains_pentagon());
            assert_eq!(
                lat.is_distributive(),
                !lat.contains_pentagon() && !lat.contains_diamond()
            );
        }
    }

    #[test]
    fn irreducibles_on_chain_and_square() {
        let lat = c3();
        let irr = lat.irreducibles();
        assert_eq!(irr.mi, ElemSet::from_iter([0, 1, 2]));
        assert_eq!(irr.smi, ElemSet::from_iter([0, 1]));
        assert_eq!(irr.maximal, ElemSet::from_iter([1]));
        assert_eq!(irr.compact, lat.carrier());

        let b2 = FiniteLattice::boolean(2);
        let irr = b2.irreducibles();
        let atoms: Vec<usize> = b2
            .elements()
            .filter(|&x| x != b2.bottom() && x != b2.top())
            .collect();
        assert_eq!(irr.smi, ElemSet::from_iter(atoms.clone()));
        assert_eq!(irr.maximal, ElemSet::from_iter(atoms));
        // the top is never strictly meet-irreducible
        assert!(!irr.smi.contains(b2.top()));
        for (x, succ) in irr.successor.iter().enumerate() {
            if irr.smi.contains(x) {
                let s = succ.unwrap();
                assert_eq!(b2.upper_covers(x), ElemSet::single(s));
            }
        }
    }

    #[test]
    fn generated_ideal_and_filter() {
        let lat = c3();
        assert_eq!(lat.generated_ideal(ElemSet::from_iter([0, 1])), 1);
        assert_eq!(lat.generated_ideal(ElemSet::EMPTY), lat.bottom());
        assert_eq!(lat.generated_filter(ElemSet::EMPTY), lat.top());
        let m3 = FiniteLattice::diamond();
        assert_eq!(m3.generated_ideal(ElemSet::from_iter([1, 2])), m3.top());
    }

    #[test]
    fn chain_congruences_match_partition_oracle() {
        let lat = c3();
        let closure = lat.congruences();
        let naive = lat.congruences_naive();
        assert_eq!(closure.len(), 4);
        assert_eq!(closure, naive);
        let blocks: Vec<Vec<ElemSet>> = closure.iter().map(|c| c.blocks().to_vec()).collect();
        assert!(blocks.contains(&vec![ElemSet::from_iter([0, 1]), ElemSet::single(2)]));
        assert!(blocks.contains(&vec![ElemSet::single(0), ElemSet::from_iter([1, 2])]));
    }

    #[test]
    fn congruence_generated_by_closure() {
        let lat = c3();
        let theta = lat.congruence_generated(&[(0, 1)]);
        assert_eq!(theta.blocks(), &[ElemSet::from_iter([0, 1]), ElemSet::single(2)]);
        assert!(lat.congruence_generated(&[]).is_delta());
    }

    #[test]
    fn congruence_generated_is_least_containing() {
        for lat in [FiniteLattice::chain(4), FiniteLattice::diamond(), FiniteLattice::pentagon()] {
            let all = lat.congruences();
            for a in 0..lat.n() {
                for b in 0..lat.n() {
                    let generated = lat.congruence_generated(&[(a, b)]);
                    // intersection of all congruences relating a and b
                    let least = all
                        .iter()
                        .filter(|t| t.related(a, b))
                        .cloned()
                        .reduce(|x, y| x.intersect(&y))
                        .unwrap();
                    assert_eq!(generated, least);
                }
            }
        }
    }

    #[test]
    fn quotient_examples() {
        let lat = c3();
        let theta = LatticeCongruence::from_blocks(
            &lat,
            &[ElemSet::from_iter([0, 1]), ElemSet::single(2)],
        )
        .unwrap();
        let (q, proj) = lat.quotient(&theta);
        assert_eq!(q.n(), 2);
        assert!(q.is_isomorphic(&FiniteLattice::chain(2)));
        assert_eq!(proj[0], proj[1]);

        let (q_delta, _) = lat.quotient(&LatticeCongruence::delta(3));
        assert!(q_delta.is_isomorphic(&lat));
        let (q_nabla, _) = lat.quotient(&LatticeCongruence::nabla(3));
        assert_eq!(q_nabla.n(), 1);
    }

    #[test]
    fn incompatible_partition_rejected() {
        let m3 = FiniteLattice::diamond();
        // glueing two atoms without the rest is not compatible
        let err = LatticeCongruence::from_blocks(
            &m3,
            &[
                ElemSet::single(0),
                ElemSet::from_iter([1, 2]),
                ElemSet::single(3),
                ElemSet::single(4),
            ],
        )
        .unwrap_err();
        assert_eq!(err, CongruenceError::NotCompatible);
    }

    #[test]
    fn product_of_two_chains_is_square() {
        let c2 = FiniteLattice::chain(2);
        let (b2, _) = c2.direct_product(&c2);
        assert!(b2.is_isomorphic(&FiniteLattice::boolean(2)));
    }

    #[test]
    fn square_bounded_sublattices() {
        let b2 = FiniteLattice::boolean(2);
        let subs = b2.bounded_sublattices();
        let (bot, top) = (b2.bottom(), b2.top());
        let mids: Vec<usize> = b2.elements().filter(|&x| x != bot && x != top).collect();
        assert!(subs.contains(&ElemSet::from_iter([bot, top])));
        assert!(subs.contains(&ElemSet::from_iter([bot, mids[0], top])));
        assert!(subs.contains(&ElemSet::from_iter([bot, mids[1], top])));
        assert!(subs.contains(&b2.carrier()));
        assert_eq!(subs.len(), 4);
    }

    #[test]
    fn class_extrema_and_minmax_identities() {
        let lat = c3();
        let theta = LatticeCongruence::from_blocks(
            &lat,
            &[ElemSet::from_iter([0, 1]), ElemSet::single(2)],
        )
        .unwrap();
        assert_eq!(lat.class_extrema(&theta, 1), (0, 1));

        // min((x v y)/theta) = min(x/theta) v min(y/theta), dually for max
        for lat in [FiniteLattice::chain(4), FiniteLattice::diamond(), FiniteLattice::pentagon()] {
            for theta in lat.congruences() {
                for x in lat.elements() {
                    for y in lat.elements() {
                        let (min_x, max_x) = lat.class_extrema(&theta, x);
                        let (min_y, max_y) = lat.class_extrema(&theta, y);
                        let (min_j, _) = lat.class_extrema(&theta, lat.join(x, y));
                        let (_, max_m) = lat.class_extrema(&theta, lat.meet(x, y));
                        assert_eq!(min_j, lat.join(min_x, min_y));
                        assert_eq!(max_m, lat.meet(max_x, max_y));
                    }
                }
            }
        }
    }

    #[test]
    fn blocks_are_convex_intervals() {
        for lat in [FiniteLattice::chain(5), FiniteLattice::diamond(), FiniteLattice::pentagon()] {
            for theta in lat.congruences() {
                for block in theta.blocks() {
                    let x = block.min_elem().unwrap();
                    let (lo, hi) = lat.class_extrema(&theta, x);
                    assert_eq!(*block, lat.up_set(lo) & lat.down_set(hi));
                }
            }
        }
    }

    #[test]
    fn zero_regularity() {
        assert!(FiniteLattice::chain(2).is_0_regular());
        assert!(!c3().is_0_regular());
        assert!(FiniteLattice::chain(1).is_0_regular());
    }

    #[test]
    fn canonical_form_identifies_isomorphs() {
        let c2 = FiniteLattice::chain(2);
        let square = c2.direct_product(&c2).0;
        assert_eq!(square.canonical_form(), FiniteLattice::boolean(2).canonical_form());
        // relabeled pentagon: same structure under a permuted construction order
        let labels = ["t", "u", "v", "w", "z"].map(String::from).to_vec();
        let n5b = FiniteLattice::from_covers(labels, &[(4, 2), (4, 3), (2, 1), (1, 0), (3, 0)]).unwrap();
        assert!(n5b.is_isomorphic(&FiniteLattice::pentagon()));
        assert!(!n5b.is_isomorphic(&FiniteLattice::diamond()));
    }

    #[test]
    fn dual_swaps_bounds() {
        let n5 = FiniteLattice::pentagon();
        let d = n5.dual();
        assert_eq!(d.bottom(), n5.top());
        assert_eq!(d.top(), n5.bottom());
        assert!(d.dual().is_isomorphic(&n5));
        for x in n5.elements() {
            for y in n5.elements() {
                assert_eq!(d.meet(x, y), n5.join(x, y));
            }
        }
    }

    #[test]
    fn divisor_lattice_is_distributive() {
        let d12 = FiniteLattice::divisors(12);
        assert_eq!(d12.n(), 6);
        assert!(d12.is_distributive());
        assert_tables_are_bounds(&d12);
    }
}
