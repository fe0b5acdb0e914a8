//! Finite commutative unitary rings: ideal lattices as commutator lattices
//! (ideal product as the commutator), annihilators, idempotents, radicals,
//! semiprimality, the Baer conditions (1°)-(5°)/(iv°), the reticulation,
//! and the bridge to the lattice-level conditions on Id(R).

use crate::check::{Check, CheckList, Outcome};
use crate::commutator::CommutatorLattice;
use crate::conditions::{self, AnnSet, ConditionContext, ConditionId, Family, Kappa, Verdict};
use crate::lattice::{FiniteLattice, LatticeCongruence};
use crate::set::{ElemSet, MAX_ELEMS};
use serde::Serialize;
use thiserror::Error;

/// Table rings are fully validated (every axiom over every triple) up to
/// this size and rejected above it; modular and product constructions are
/// correct by construction and accept the full carrier cap.
pub const VALIDATE_MAX: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("not a ring: {axiom} fails at {witness:?}")]
    NotARing { axiom: &'static str, witness: Vec<usize> },
    #[error("carrier of {requested} exceeds the cap {max}")]
    TooLarge { requested: usize, max: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Provenance {
    Zn(u64),
    Product(Vec<Provenance>),
    Table,
}

/// A finite commutative unitary ring with dense element indices.
#[derive(Clone)]
pub struct FiniteCommRing {
    n: usize,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    zero: usize,
    one: usize,
    labels: Vec<String>,
    provenance: Provenance,
}

impl std::fmt::Debug for FiniteCommRing {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FiniteCommRing(n={}, {:?})", self.n, self.provenance)
    }
}

impl FiniteCommRing {
    /// The integers modulo `n`.
    pub fn zn(n: u64) -> Result<FiniteCommRing, RingError> {
        if n == 0 {
            return Err(RingError::NotARing { axiom: "nonempty carrier", witness: vec![] });
        }
        let size = n as usize;
        if size > MAX_ELEMS {
            return Err(RingError::TooLarge { requested: size, max: MAX_ELEMS });
        }
        let idx = |a: u64| (a % n) as usize;
        let mut add = vec![0u8; size * size];
        let mut mul = vec![0u8; size * size];
        for a in 0..n {
            for b in 0..n {
                add[(a as usize) * size + b as usize] = idx(a + b) as u8;
                mul[(a as usize) * size + b as usize] = idx(a * b) as u8;
            }
        }
        let neg = (0..n).map(|a| idx(n - a) as u8).collect();
        let ring = FiniteCommRing {
            n: size,
            add,
            mul,
            neg,
            zero: 0,
            one: if size == 1 { 0 } else { 1 },
            labels: (0..n).map(|a| a.to_string()).collect(),
            provenance: Provenance::Zn(n),
        };
        if size <= VALIDATE_MAX {
            ring.validate()?;
        }
        Ok(ring)
    }

    /// Componentwise product of rings.
    pub fn product(factors: &[&FiniteCommRing]) -> Result<FiniteCommRing, RingError> {
        assert!(!factors.is_empty());
        let mut acc = factors[0].clone();
        for f in &factors[1..] {
            acc = acc.pair_product(f)?;
        }
        Ok(acc)
    }

    fn pair_product(&self, other: &FiniteCommRing) -> Result<FiniteCommRing, RingError> {
        let n = self.n * other.n;
        if n > MAX_ELEMS {
            return Err(RingError::TooLarge { requested: n, max: MAX_ELEMS });
        }
        let at = |i: usize, j: usize| i * other.n + j;
        let mut add = vec![0u8; n * n];
        let mut mul = vec![0u8; n * n];
        let mut neg = vec![0u8; n];
        let mut labels = Vec::with_capacity(n);
        for i in 0..self.n {
            for j in 0..other.n {
                let p = at(i, j);
                neg[p] = at(self.neg(i), other.neg(j)) as u8;
                labels.push(format!("({},{})", self.labels[i], other.labels[j]));
                for k in 0..self.n {
                    for l in 0..other.n {
                        let q = at(k, l);
                        add[p * n + q] = at(self.add(i, k), other.add(j, l)) as u8;
                        mul[p * n + q] = at(self.mul(i, k), other.mul(j, l)) as u8;
                    }
                }
            }
        }
        let ring = FiniteCommRing {
            n,
            add,
            mul,
            neg,
            zero: at(self.zero, other.zero),
            one: at(self.one, other.one),
            labels,
            provenance: Provenance::Product(vec![self.provenance.clone(), other.provenance.clone()]),
        };
        if n <= VALIDATE_MAX {
            ring.validate()?;
        }
        Ok(ring)
    }

    /// A ring from explicit addition and multiplication tables; every axiom
    /// is checked over every triple, and carriers above the validation cap
    /// are rejected outright.
    pub fn from_tables(add: Vec<Vec<usize>>, mul: Vec<Vec<usize>>) -> Result<FiniteCommRing, RingError> {
        let n = add.len();
        if n == 0 {
            return Err(RingError::NotARing { axiom: "nonempty carrier", witness: vec![] });
        }
        if n > VALIDATE_MAX {
            return Err(RingError::TooLarge { requested: n, max: VALIDATE_MAX });
        }
        let flat = |t: &[Vec<usize>]| -> Result<Vec<u8>, RingError> {
            let mut out = Vec::with_capacity(n * n);
            for row in t {
                if row.len() != n {
                    return Err(RingError::NotARing { axiom: "square table", witness: vec![] });
                }
                for &v in row {
                    if v >= n {
                        return Err(RingError::NotARing { axiom: "entries in range", witness: vec![v] });
                    }
                    out.push(v as u8);
                }
            }
            Ok(out)
        };
        let add = flat(&add)?;
        let mul = flat(&mul)?;
        let zero = (0..n)
            .find(|&e| (0..n).all(|a| add[a * n + e] as usize == a))
            .ok_or(RingError::NotARing { axiom: "additive identity", witness: vec![] })?;
        let one = (0..n)
            .find(|&e| (0..n).all(|a| mul[a * n + e] as usize == a))
            .ok_or(RingError::NotARing { axiom: "multiplicative identity", witness: vec![] })?;
        let mut neg = vec![0u8; n];
        for a in 0..n {
            neg[a] = (0..n)
                .find(|&b| add[a * n + b] as usize == zero)
                .ok_or(RingError::NotARing { axiom: "additive inverse", witness: vec![a] })?
                as u8;
        }
        let ring = FiniteCommRing {
            n,
            add,
            mul,
            neg,
            zero,
            one,
            labels: (0..n).map(|i| i.to_string()).collect(),
            provenance: Provenance::Table,
        };
        ring.validate()?;
        Ok(ring)
    }

    fn validate(&self) -> Result<(), RingError> {
        let n = self.n;
        let fail = |axiom, witness: Vec<usize>| Err(RingError::NotARing { axiom, witness });
        if n > 1 && self.zero == self.one {
            return fail("0 != 1", vec![self.zero]);
        }
        for a in 0..n {
            if self.add(a, self.neg(a)) != self.zero {
                return fail("additive inverse", vec![a]);
            }
            for b in 0..n {
                if self.add(a, b) != self.add(b, a) {
                    return fail("commutative addition", vec![a, b]);
                }
                if self.mul(a, b) != self.mul(b, a) {
                    return fail("commutative multiplication", vec![a, b]);
                }
                for c in 0..n {
                    if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
                        return fail("associative addition", vec![a, b, c]);
                    }
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        return fail("associative multiplication", vec![a, b, c]);
                    }
                    if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
                        return fail("distributivity", vec![a, b, c]);
                    }
                }
            }
        }
        Ok(())
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

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.n + b] as usize
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.n + b] as usize
    }

    pub fn neg(&self, a: usize) -> usize {
        self.neg[a] as usize
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    /// Idempotent elements. They always form a Boolean algebra under
    /// `e ^ f = ef`, `e v f = 1 - (1-e)(1-f)`, `not e = 1 - e`.
    pub fn idempotents(&self) -> ElemSet {
        ElemSet::from_iter(self.elements().filter(|&e| self.mul(e, e) == e))
    }

    pub fn idem_not(&self, e: usize) -> usize {
        self.sub(self.one, e)
    }

    pub fn idem_or(&self, e: usize, f: usize) -> usize {
        self.sub(self.one, self.mul(self.idem_not(e), self.idem_not(f)))
    }

    /// Boolean-algebra laws of the idempotents, checked exhaustively.
    pub fn idempotent_checks(&self) -> Vec<Check> {
        let e_set = self.idempotents();
        let mut out = CheckList::new();
        out.push("idempotents.boolean_algebra", {
            let mut res = Outcome::Holds;
            'all: for e in e_set.iter() {
                let not_e = self.idem_not(e);
                if !e_set.contains(not_e)
                    || self.mul(e, not_e) != self.zero
                    || self.idem_or(e, not_e) != self.one
                {
                    res = Outcome::failed(format!("complement laws fail at {}", self.label(e)));
                    break;
                }
                for f in e_set.iter() {
                    if !e_set.contains(self.mul(e, f)) || !e_set.contains(self.idem_or(e, f)) {
                        res = Outcome::failed("idempotents not closed under the lattice operations".to_string());
                        break 'all;
                    }
                    for g in e_set.iter() {
                        let lhs = self.mul(e, self.idem_or(f, g));
                        let rhs = self.idem_or(self.mul(e, f), self.mul(e, g));
                        if lhs != rhs {
                            res = Outcome::failed("idempotent distributivity fails".to_string());
                            break 'all;
                        }
                    }
                }
            }
            res
        });
        out.into_vec()
    }

    /// The principal ideal `xR`.
    pub fn principal_ideal(&self, x: usize) -> ElemSet {
        ElemSet::from_iter(self.elements().map(|r| self.mul(r, x)))
    }

    /// The ideal generated by a subset: the additive closure of all
    /// multiples of its members.
    pub fn generated_ideal(&self, u: ElemSet) -> ElemSet {
        let mut s = ElemSet::single(self.zero);
        for x in u.iter() {
            s = s | self.principal_ideal(x);
        }
        self.additive_closure(s)
    }

    fn additive_closure(&self, seed: ElemSet) -> ElemSet {
        let mut s = seed.with(self.zero);
        loop {
            let mut next = s;
            for a in s.iter() {
                for b in s.iter() {
                    next.insert(self.add(a, b));
                }
            }
            if next == s {
                return s;
            }
            s = next;
        }
    }

    pub fn is_ideal(&self, s: ElemSet) -> bool {
        s.contains(self.zero)
            && s.iter().all(|a| {
                s.contains(self.neg(a))
                    && s.iter().all(|b| s.contains(self.add(a, b)))
                    && self.elements().all(|r| s.contains(self.mul(r, a)))
            })
    }

    /// All ideals: closure of the principal ideals under ideal sum.
    pub fn ideals(&self) -> Vec<ElemSet> {
        let mut all: Vec<ElemSet> = Vec::new();
        for x in self.elements() {
            let p = self.principal_ideal(x);
            if !all.contains(&p) {
                all.push(p);
            }
        }
        loop {
            let mut added = false;
            let snapshot = all.clone();
            for i in 0..snapshot.len() {
                for j in i + 1..snapshot.len() {
                    let sum = self.ideal_sum(snapshot[i], snapshot[j]);
                    if !all.contains(&sum) {
                        all.push(sum);
                        added = true;
                    }
                }
            }
            if !added {
                break;
            }
        }
        all.sort_by_key(|s| (s.len(), *s));
        all
    }

    /// Sum of two ideals is elementwise.
    pub fn ideal_sum(&self, i: ElemSet, j: ElemSet) -> ElemSet {
        let mut out = ElemSet::EMPTY;
        for a in i.iter() {
            for b in j.iter() {
                out.insert(self.add(a, b));
            }
        }
        out
    }

    /// Product of two ideals: additive closure of the pairwise products.
    pub fn ideal_product(&self, i: ElemSet, j: ElemSet) -> ElemSet {
        let mut seed = ElemSet::EMPTY;
        for a in i.iter() {
            for b in j.iter() {
                seed.insert(self.mul(a, b));
            }
        }
        self.additive_closure(seed)
    }

    /// Brute-force ideal enumeration over all subsets; the oracle for tiny
    /// carriers.
    pub fn ideals_naive(&self) -> Vec<ElemSet> {
        assert!(self.n <= 8, "subset enumeration is for tiny rings");
        let mut out: Vec<ElemSet> = self
            .carrier()
            .subsets()
            .filter(|&s| self.is_ideal(s))
            .collect();
        out.sort_by_key(|s| (s.len(), *s));
        out
    }

    /// `Ann(U) = {x : xu = 0 for all u in U}`; always an ideal.
    pub fn annihilator(&self, u: ElemSet) -> ElemSet {
        let ann = ElemSet::from_iter(
            self.elements()
                .filter(|&x| u.iter().all(|a| self.mul(x, a) == self.zero)),
        );
        debug_assert!(self.is_ideal(ann));
        ann
    }

    /// Distinct ring annihilators with source witnesses, closed under
    /// intersection from the single-element annihilators.
    pub fn annihilator_family(&self) -> Vec<AnnSet> {
        let mut all = vec![AnnSet { members: self.carrier(), source: ElemSet::EMPTY }];
        for a in self.elements() {
            let cand = AnnSet { members: self.annihilator(ElemSet::single(a)), source: ElemSet::single(a) };
            if !all.iter().any(|x| x.members == cand.members) {
                all.push(cand);
            }
        }
        loop {
            let mut added = false;
            let snapshot = all.clone();
            for i in 0..snapshot.len() {
                for j in i + 1..snapshot.len() {
                    let cand = AnnSet {
                        members: snapshot[i].members & snapshot[j].members,
                        source: snapshot[i].source | snapshot[j].source,
                    };
                    if !all.iter().any(|x| x.members == cand.members) {
                        all.push(cand);
                        added = true;
                    }
                }
            }
            if !added {
                break;
            }
        }
        all.sort_by_key(|a| (a.members.len(), a.members));
        all
    }

    pub fn nilpotents(&self) -> ElemSet {
        // powers of a non-nilpotent element cycle without visiting zero;
        // after n steps the sequence is inside its cycle either way
        ElemSet::from_iter(self.elements().filter(|&x| {
            let mut cur = x;
            for _ in 0..self.n {
                if cur == self.zero {
                    return true;
                }
                cur = self.mul(x, cur);
            }
            cur == self.zero
        }))
    }
}

/// The ideal lattice with the ideal product as its commutator.
pub struct IdealLattice {
    pub sets: Vec<ElemSet>,
    pub commutator: CommutatorLattice,
}

impl IdealLattice {
    pub fn new(ring: &FiniteCommRing) -> IdealLattice {
        let sets = ring.ideals();
        let k = sets.len();
        let index_of = |s: ElemSet| sets.iter().position(|&t| t == s).unwrap();
        let labels: Vec<String> = sets
            .iter()
            .map(|s| {
                // label a principal ideal by a smallest generator
                match ring.elements().find(|&g| ring.principal_ideal(g) == *s) {
                    Some(g) => format!("({})", ring.label(g)),
                    None => {
                        let names: Vec<&str> = s.iter().map(|x| ring.label(x)).collect();
                        format!("{{{}}}", names.join(","))
                    }
                }
            })
            .collect();
        let mut up = vec![ElemSet::EMPTY; k];
        for (i, &a) in sets.iter().enumerate() {
            for (j, &b) in sets.iter().enumerate() {
                if a.is_subset(b) {
                    up[i].insert(j);
                }
            }
        }
        let lat = FiniteLattice::from_order(labels, up).expect("ideals form a lattice");
        // join is the ideal sum, meet the intersection
        for (i, &a) in sets.iter().enumerate() {
            for (j, &b) in sets.iter().enumerate() {
                debug_assert_eq!(sets[lat.join(i, j)], ring.ideal_sum(a, b));
                debug_assert_eq!(sets[lat.meet(i, j)], a & b);
            }
        }
        let mut table = vec![0usize; k * k];
        for (i, &a) in sets.iter().enumerate() {
            for (j, &b) in sets.iter().enumerate() {
                table[i * k + j] = index_of(ring.ideal_product(a, b));
            }
        }
        let commutator =
            CommutatorLattice::new(lat, table).expect("the ideal product is a commutator");
        IdealLattice { sets, commutator }
    }

    pub fn lattice(&self) -> &FiniteLattice {
        self.commutator.base()
    }

    pub fn index_of(&self, s: ElemSet) -> Option<usize> {
        self.sets.iter().position(|&t| t == s)
    }
}

/// Bundled per-ring data for condition checking.
pub struct RingConditionContext<'a> {
    pub ring: &'a FiniteCommRing,
    pub ideals: IdealLattice,
    pub idempotents: ElemSet,
    pub family: Vec<AnnSet>,
}

/// Carriers at most this large get the brute-force all-subsets route for
/// `Kappa::Finite`.
const BRUTE_KAPPA_MAX_RING: usize = 8;

impl<'a> RingConditionContext<'a> {
    pub fn new(ring: &'a FiniteCommRing) -> RingConditionContext<'a> {
        RingConditionContext {
            ring,
            ideals: IdealLattice::new(ring),
            idempotents: ring.idempotents(),
            family: ring.annihilator_family(),
        }
    }

    fn label_set(&self, s: ElemSet) -> String {
        let names: Vec<&str> = s.iter().map(|x| self.ring.label(x)).collect();
        format!("{{{}}}", names.join(","))
    }

    fn scope(&self, kappa: Kappa) -> Vec<AnnSet> {
        match kappa {
            Kappa::One => {
                let mut out = vec![AnnSet { members: self.ring.carrier(), source: ElemSet::EMPTY }];
                for a in self.ring.elements() {
                    out.push(AnnSet {
                        members: self.ring.annihilator(ElemSet::single(a)),
                        source: ElemSet::single(a),
                    });
                }
                out
            }
            Kappa::Finite if self.ring.n() <= BRUTE_KAPPA_MAX_RING => self
                .ring
                .carrier()
                .subsets()
                .map(|u| AnnSet { members: self.ring.annihilator(u), source: u })
                .collect(),
            Kappa::Finite | Kappa::All => self.family.clone(),
        }
    }

    /// Is the set generated by an idempotent? Distinct idempotents can
    /// generate the same ideal, so all of them are scanned.
    fn idempotent_generated(&self, s: ElemSet) -> Option<usize> {
        self.idempotents
            .iter()
            .find(|&e| self.ring.principal_ideal(e) == s)
    }

    pub fn is_baer(&self) -> bool {
        self.check(ConditionId::new(Family::C1, Kappa::One)).holds
    }

    pub fn is_strongly_baer(&self) -> bool {
        self.check(ConditionId::new(Family::C1, Kappa::All)).holds
    }

    pub fn is_semiprime(&self) -> bool {
        let radical_route = {
            let zero_ideal = ElemSet::single(self.ring.zero());
            let idx = self.ideals.index_of(zero_ideal).unwrap();
            let s = self.ideals.commutator.spectrum();
            s.radical[idx] == idx
        };
        let nilpotent_route = self.ring.nilpotents() == ElemSet::single(self.ring.zero());
        assert_eq!(radical_route, nilpotent_route, "semiprimality routes disagree");
        radical_route
    }

    /// Prime ideals: the prime elements of the ideal commutator lattice,
    /// cross-checked against the elementwise characterization.
    pub fn prime_ideals(&self) -> Vec<ElemSet> {
        let s = self.ideals.commutator.spectrum();
        let via_lattice: Vec<ElemSet> = s.spec.iter().map(|i| self.ideals.sets[i]).collect();
        let via_elements: Vec<ElemSet> = self
            .ideals
            .sets
            .iter()
            .copied()
            .filter(|&p| {
                p != self.ring.carrier()
                    && self.ring.elements().all(|x| {
                        self.ring.elements().all(|y| {
                            !p.contains(self.ring.mul(x, y)) || p.contains(x) || p.contains(y)
                        })
                    })
            })
            .collect();
        assert_eq!(via_lattice, via_elements, "prime-ideal routes disagree");
        via_lattice
    }

    /// `sqrt(I)`: intersection of the primes containing the ideal.
    pub fn radical_ideal(&self, ideal: ElemSet) -> ElemSet {
        self.prime_ideals()
            .into_iter()
            .filter(|p| ideal.is_subset(*p))
            .fold(self.ring.carrier(), |acc, p| acc & p)
    }

    pub fn check(&self, cond: ConditionId) -> Verdict {
        match cond.family {
            Family::C1 => self.check_c1(cond.kappa.unwrap()),
            Family::C2 => self.check_c2(),
            Family::C3 => self.check_c3(),
            Family::C4 => self.check_c4(cond.kappa.unwrap()),
            Family::C5 => self.check_c5(cond.kappa.unwrap()),
            Family::Iv => self.check_iv(),
        }
    }

    /// (1°): every in-scope annihilator is generated by an idempotent.
    fn check_c1(&self, kappa: Kappa) -> Verdict {
        for ann in self.scope(kappa) {
            if self.idempotent_generated(ann.members).is_none() {
                return Verdict::fail(format!(
                    "Ann{} = {} has no idempotent generator",
                    self.label_set(ann.source),
                    self.label_set(ann.members)
                ));
            }
        }
        Verdict::pass()
    }

    /// (2°): Baer plus the idempotents forming a Boolean algebra; the
    /// latter always holds and kappa-completeness is automatic on a finite
    /// carrier.
    fn check_c2(&self) -> Verdict {
        let baer = self.check_c1(Kappa::One);
        if !baer.holds {
            return Verdict::fail(format!("not Baer: {}", baer.witness.unwrap()));
        }
        if self.ring.idempotent_checks().iter().any(|c| c.outcome.is_failure()) {
            return Verdict::fail("idempotents do not form a Boolean algebra");
        }
        Verdict::pass()
    }

    /// (3°): the double annihilators form a Boolean sublattice of Id(R) and
    /// `I -> Ann(Ann(I))` is a lattice morphism.
    fn check_c3(&self) -> Verdict {
        let ring = self.ring;
        let double = |s: ElemSet| ring.annihilator(ring.annihilator(s));
        let mut two_ann: Vec<ElemSet> = self.ideals.sets.iter().map(|&i| double(i)).collect();
        two_ann.sort();
        two_ann.dedup();
        for &s in &two_ann {
            if self.ideals.index_of(s).is_none() {
                return Verdict::fail("a double annihilator is not an ideal of the family");
            }
        }
        let zero_ideal = ElemSet::single(ring.zero());
        if !two_ann.contains(&zero_ideal) || !two_ann.contains(&ring.carrier()) {
            return Verdict::fail("2Ann misses a bound of Id(R)");
        }
        for &a in &two_ann {
            for &b in &two_ann {
                if !two_ann.contains(&(a & b)) || !two_ann.contains(&ring.ideal_sum(a, b)) {
                    return Verdict::fail("2Ann is not closed under sum and intersection");
                }
            }
        }
        // Boolean: the induced sublattice of Id(R) on the 2Ann members
        let members = ElemSet::from_iter(two_ann.iter().map(|&s| self.ideals.index_of(s).unwrap()));
        let (sub, _) = self.ideals.lattice().sublattice(members);
        if !sub.is_distributive() || !conditions::is_complemented(&sub) {
            return Verdict::fail("2Ann is not a Boolean sublattice of Id(R)");
        }
        for &i in &self.ideals.sets {
            for &j in &self.ideals.sets {
                if double(i & j) != (double(i) & double(j))
                    || double(ring.ideal_sum(i, j)) != ring.ideal_sum(double(i), double(j))
                {
                    return Verdict::fail("I -> Ann(Ann(I)) is not a lattice morphism");
                }
            }
        }
        Verdict::pass()
    }

    /// (iv°): `Ann(I ∩ J) = Ann(I) + Ann(J)` over all ideal pairs.
    fn check_iv(&self) -> Verdict {
        let ring = self.ring;
        for &i in &self.ideals.sets {
            for &j in &self.ideals.sets {
                let lhs = ring.annihilator(i & j);
                let rhs = ring.ideal_sum(ring.annihilator(i), ring.annihilator(j));
                if lhs != rhs {
                    return Verdict::fail(format!(
                        "Ann(I∩J) != Ann(I)+Ann(J) at I={}, J={}",
                        self.label_set(i),
                        self.label_set(j)
                    ));
                }
            }
        }
        Verdict::pass()
    }

    /// (4°): (iv°) plus the finite-subset reduction of double annihilators.
    /// On a finite carrier the reduction always holds with witness
    /// `S = Ann(U)`, since `Ann(S) = Ann(Ann(U))` by definition; it is
    /// recorded per in-scope subset rather than skipped.
    fn check_c4(&self, kappa: Kappa) -> Verdict {
        let iv = self.check_iv();
        if !iv.holds {
            return iv;
        }
        for ann in self.scope(kappa) {
            let witness = ann.members; // the finite set S = Ann(U)
            let double = self.ring.annihilator(ann.members);
            if self.ring.annihilator(witness) != double {
                return Verdict::fail(format!(
                    "no finite subset reproduces Ann(Ann{})",
                    self.label_set(ann.source)
                ));
            }
        }
        Verdict::pass()
    }

    /// (5°): `Ann(U) + Ann(Ann(U)) = R` for every in-scope subset.
    fn check_c5(&self, kappa: Kappa) -> Verdict {
        for ann in self.scope(kappa) {
            let double = self.ring.annihilator(ann.members);
            if self.ring.ideal_sum(ann.members, double) != self.ring.carrier() {
                return Verdict::fail(format!(
                    "Ann{} + Ann(Ann{}) is a proper ideal",
                    self.label_set(ann.source),
                    self.label_set(ann.source)
                ));
            }
        }
        Verdict::pass()
    }

    pub fn grid(&self) -> Vec<(ConditionId, bool)> {
        ConditionId::grid()
            .into_iter()
            .map(|c| (c, self.check(c).holds))
            .collect()
    }

    /// The reticulation `R* = Id(R)/~` by the same-radical congruence, with
    /// the cross-check against the commutator-lattice construction.
    pub fn reticulation(&self) -> (FiniteLattice, Vec<Check>) {
        let mut out = CheckList::new();
        let radicals: Vec<ElemSet> = self.ideals.sets.iter().map(|&i| self.radical_ideal(i)).collect();
        let class_of: Vec<usize> = radicals
            .iter()
            .map(|r| self.ideals.index_of(*r).expect("radical is an ideal"))
            .collect();
        let same_radical = LatticeCongruence::new(self.ideals.lattice(), &class_of);
        out.push(
            "reticulation.congruence",
            match &same_radical {
                Ok(_) => Outcome::Holds,
                Err(e) => Outcome::failed(format!("same-radical relation is no congruence: {e}")),
            },
        );
        let theta = same_radical.expect("same-radical congruence");
        let (quotient, _) = self.ideals.lattice().quotient(&theta);
        out.push("reticulation.matches_commutator_route", {
            // the lattice radical of an ideal element is its ideal radical,
            // so the radical congruence of the commutator lattice is ~
            let s = self.ideals.commutator.spectrum();
            let same = (0..self.ideals.sets.len())
                .all(|i| self.ideals.sets[s.radical[i]] == radicals[i]);
            let retic = self.ideals.commutator.reticulation();
            Outcome::require(same && retic.is_isomorphic(&quotient), || {
                "ideal radicals and lattice radicals diverge".into()
            })
        });
        out.push("reticulation.distributive", {
            Outcome::require(quotient.is_distributive(), || "reticulation is not distributive".into())
        });
        (quotient, out.into_vec())
    }

    /// The grid on the ring, the grid on Id(R), and every asserted bridge.
    pub fn baer_bridge_report(&self) -> BridgeReport {
        let ring = self.ring;
        let semiprime = self.is_semiprime();
        let ring_grid = self.grid();
        let id_ctx = ConditionContext::new(self.ideals.lattice());
        let id_grid: Vec<(ConditionId, bool)> = ConditionId::grid()
            .into_iter()
            .map(|c| (c, id_ctx.check(c).holds))
            .collect();
        let r_holds = |c: ConditionId| ring_grid.iter().find(|(x, _)| *x == c).unwrap().1;
        let id_holds = |c: ConditionId| id_grid.iter().find(|(x, _)| *x == c).unwrap().1;
        let mut out = CheckList::new();

        out.push("annr.generated", {
            let mut res = Outcome::Holds;
            for ann in &self.family {
                if ring.annihilator(ring.generated_ideal(ann.source)) != ann.members {
                    res = Outcome::failed(format!("Ann(U) != Ann(<U>) at {}", self.label_set(ann.source)));
                    break;
                }
            }
            res
        });
        // the lattice-level annihilator of the element I of Id(R) is taken
        // with respect to the commutator (the ideal product): J annihilates
        // I when J.I = {0}; with the meet it coincides exactly on semiprime
        // rings
        let prod_ann = |target: ElemSet| -> ElemSet {
            let cl = &self.ideals.commutator;
            let bot = cl.base().bottom();
            ElemSet::from_iter(
                (0..self.ideals.sets.len())
                    .filter(|&j| target.iter().all(|i| cl.comm(j, i) == bot)),
            )
        };
        out.push("annr.lattice_annihilator", {
            let lat = self.ideals.lattice();
            let mut res = Outcome::Holds;
            for (i, &ideal) in self.ideals.sets.iter().enumerate() {
                let ann = prod_ann(ElemSet::single(i));
                let ring_ann_idx = self.ideals.index_of(ring.annihilator(ideal)).unwrap();
                if ann != lat.down_set(ring_ann_idx) {
                    res = Outcome::failed("Ann_Id(I) != (Ann_R(I)]".to_string());
                    break;
                }
                let dbl = prod_ann(ann);
                let ring_dbl_idx = self
                    .ideals
                    .index_of(ring.annihilator(ring.annihilator(ideal)))
                    .unwrap();
                if dbl != lat.down_set(ring_dbl_idx) {
                    res = Outcome::failed("double annihilators diverge".to_string());
                    break;
                }
            }
            res
        });
        out.gated("annr.meet_annihilator", semiprime, || {
            // under semiprimality the meet annihilator of Id(R) agrees
            let lat = self.ideals.lattice();
            for (i, &ideal) in self.ideals.sets.iter().enumerate() {
                let ann = conditions::annihilator(lat, ElemSet::single(i)).members;
                let ring_ann_idx = self.ideals.index_of(ring.annihilator(ideal)).unwrap();
                if ann != lat.down_set(ring_ann_idx) {
                    return Outcome::failed("meet-annihilator of Id(R) diverges on a semiprime ring");
                }
            }
            Outcome::Holds
        });
        out.push("annrannidr.order_iso", {
            let lat = self.ideals.lattice();
            let ring_ann: Vec<ElemSet> = {
                let mut v: Vec<ElemSet> = self
                    .ideals
                    .sets
                    .iter()
                    .map(|&i| ring.annihilator(i))
                    .collect();
                v.sort();
                v.dedup();
                v
            };
            let pann: Vec<ElemSet> = {
                let mut v: Vec<ElemSet> = (0..self.ideals.sets.len())
                    .map(|i| prod_ann(ElemSet::single(i)))
                    .collect();
                v.sort();
                v.dedup();
                v
            };
            let image: Vec<ElemSet> = {
                let mut v: Vec<ElemSet> = ring_ann
                    .iter()
                    .map(|&s| lat.down_set(self.ideals.index_of(s).unwrap()))
                    .collect();
                v.sort();
                v.dedup();
                v
            };
            let order_ok = ring_ann.iter().all(|&a| {
                ring_ann.iter().all(|&b| {
                    a.is_subset(b)
                        == lat
                            .down_set(self.ideals.index_of(a).unwrap())
                            .is_subset(lat.down_set(self.ideals.index_of(b).unwrap()))
                })
            });
            let ring_2ann: Vec<ElemSet> = {
                let mut v: Vec<ElemSet> = self
                    .ideals
                    .sets
                    .iter()
                    .map(|&i| ring.annihilator(ring.annihilator(i)))
                    .collect();
                v.sort();
                v.dedup();
                v
            };
            let image2: Vec<ElemSet> = {
                let mut v: Vec<ElemSet> = ring_2ann
                    .iter()
                    .map(|&s| lat.down_set(self.ideals.index_of(s).unwrap()))
                    .collect();
                v.sort();
                v.dedup();
                v
            };
            let p2ann: Vec<ElemSet> = {
                let mut v: Vec<ElemSet> = (0..self.ideals.sets.len())
                    .map(|i| prod_ann(prod_ann(ElemSet::single(i))))
                    .collect();
                v.sort();
                v.dedup();
                v
            };
            Outcome::require(
                image == pann && image.len() == ring_ann.len() && order_ok
                    && image2 == p2ann && image2.len() == ring_2ann.len(),
                || "x -> (x] is not an order isomorphism of annihilator families".into(),
            )
        });
        out.push("ivr.product", {
            // with the product annihilator, (iv°) transports to Id(R)
            // unconditionally
            let lat = self.ideals.lattice();
            let iv_ring = r_holds(ConditionId::iv());
            let iv_id = (0..self.ideals.sets.len()).all(|i| {
                (0..self.ideals.sets.len()).all(|j| {
                    let lhs = prod_ann(ElemSet::single(lat.meet(i, j)));
                    let union = prod_ann(ElemSet::single(i)) | prod_ann(ElemSet::single(j));
                    lhs == lat.down_set(lat.join_set(union))
                })
            });
            Outcome::require(iv_ring == iv_id, || {
                "(iv°) and the product-annihilator (iv) on Id(R) diverge".into()
            })
        });

        for kappa in Kappa::ALL {
            let tag = |name: &str| format!("{name}[{kappa:?}]");
            out.gated(tag("3r"), semiprime, || {
                Outcome::require(
                    r_holds(ConditionId::new(Family::C3, kappa))
                        == id_holds(ConditionId::new(Family::C3, kappa)),
                    || "(3°) and (3) on Id(R) diverge".into(),
                )
            });
            out.gated(tag("2r"), semiprime, || {
                Outcome::require(
                    r_holds(ConditionId::new(Family::C2, kappa))
                        == id_holds(ConditionId::new(Family::C2, kappa)),
                    || "(2°) and (2) on Id(R) diverge".into(),
                )
            });
            out.gated(tag("4triv"), semiprime, || {
                Outcome::require(
                    r_holds(ConditionId::new(Family::C4, kappa)) == r_holds(ConditionId::iv()),
                    || "(4°) and (iv°) diverge".into(),
                )
            });
        }
        out.gated("ivr", semiprime, || {
            Outcome::require(r_holds(ConditionId::iv()) == id_holds(ConditionId::iv()), || {
                "(iv°) and (iv) on Id(R) diverge".into()
            })
        });
        out.gated("1r", semiprime, || {
            let mut vals = Vec::new();
            for kappa in Kappa::ALL {
                vals.push(r_holds(ConditionId::new(Family::C1, kappa)));
                vals.push(id_holds(ConditionId::new(Family::C1, kappa)));
            }
            Outcome::require(vals.iter().all(|&v| v == vals[0]), || {
                "(1°) and (1) on Id(R) diverge across cardinalities".into()
            })
        });
        out.gated("5r", semiprime, || {
            let mut vals = Vec::new();
            for kappa in Kappa::ALL {
                vals.push(r_holds(ConditionId::new(Family::C5, kappa)));
                vals.push(id_holds(ConditionId::new(Family::C5, kappa)));
            }
            Outcome::require(vals.iter().all(|&v| v == vals[0]), || {
                "(5°) and (5) on Id(R) diverge across cardinalities".into()
            })
        });
        out.gated("4r", semiprime, || {
            let (retic, _) = self.reticulation();
            let retic_iv = ConditionContext::new(&retic).check(ConditionId::iv()).holds;
            let mut vals = vec![r_holds(ConditionId::iv()), retic_iv];
            for kappa in Kappa::ALL {
                vals.push(r_holds(ConditionId::new(Family::C4, kappa)));
            }
            Outcome::require(vals.iter().all(|&v| v == vals[0]), || {
                "(4°), (iv°) and (iv) on the reticulation diverge".into()
            })
        });
        out.gated("myringsdavey", semiprime, || {
            let all: Vec<bool> = ring_grid.iter().map(|(_, v)| *v).collect();
            Outcome::require(all.iter().all(|&v| v == all[0]), || {
                "the (i°) grid does not collapse on a semiprime ring".into()
            })
        });
        out.gated("annfin", semiprime, || {
            // S = <U> is a finite subset of <U> with the same annihilator
            let ok = self
                .family
                .iter()
                .all(|ann| ring.annihilator(ring.generated_ideal(ann.source)) == ann.members);
            Outcome::require(ok, || "finite-subset reduction fails".into())
        });
        out.push("boolrstar.center_boolean", {
            let center = conditions::boolean_center(self.ideals.lattice());
            Outcome::require(center.is_boolean, || "B(Id(R)) is not a Boolean sublattice".into())
        });
        out.gated("boolrstar.iso", semiprime, || {
            let lat = self.ideals.lattice();
            let center = conditions::boolean_center(lat);
            let image: Vec<usize> = self
                .idempotents
                .iter()
                .map(|e| self.ideals.index_of(ring.principal_ideal(e)).unwrap())
                .collect();
            let mut distinct = image.clone();
            distinct.sort_unstable();
            distinct.dedup();
            if distinct.len() != self.idempotents.len() {
                return Outcome::failed("e -> eR is not injective");
            }
            if ElemSet::from_iter(image.iter().copied()) != center.members {
                return Outcome::failed("e -> eR does not reach exactly B(Id(R))");
            }
            for e in self.idempotents.iter() {
                for f in self.idempotents.iter() {
                    let meet_img = self.ideals.index_of(ring.principal_ideal(ring.mul(e, f))).unwrap();
                    let join_img = self
                        .ideals
                        .index_of(ring.principal_ideal(ring.idem_or(e, f)))
                        .unwrap();
                    let e_img = self.ideals.index_of(ring.principal_ideal(e)).unwrap();
                    let f_img = self.ideals.index_of(ring.principal_ideal(f)).unwrap();
                    if meet_img != lat.meet(e_img, f_img) || join_img != lat.join(e_img, f_img) {
                        return Outcome::failed("e -> eR is not a lattice morphism");
                    }
                }
            }
            Outcome::Holds
        });
        out.gated("bidrann.disjoint", semiprime, || {
            for ann in &self.family {
                let both = ann.source & ann.members;
                if !(both.is_empty() || both == ElemSet::single(ring.zero())) {
                    return Outcome::failed("U ∩ Ann(U) contains a nonzero element");
                }
            }
            for &i in &self.ideals.sets {
                if (i & ring.annihilator(i)) != ElemSet::single(ring.zero()) {
                    return Outcome::failed("I ∩ Ann(I) != {0}");
                }
            }
            Outcome::Holds
        });
        out.gated("bidrann.complemented", semiprime, || {
            for ann in &self.family {
                let double = ring.annihilator(ann.members);
                if ring.ideal_sum(ann.members, double) == ring.carrier()
                    && self.idempotent_generated(ann.members).is_none()
                {
                    return Outcome::failed("a complemented annihilator has no idempotent generator");
                }
            }
            Outcome::Holds
        });
        BridgeReport {
            semiprime,
            ring_grid,
            id_grid,
            checks: out.into_vec(),
        }
    }

    /// Enumerates ring congruences directly and verifies the canonical
    /// lattice isomorphism with Id(R). Quadratic saturation keeps this to
    /// small carriers.
    pub fn congruence_correspondence_checks(&self) -> Vec<Check> {
        let ring = self.ring;
        assert!(ring.n() <= 16, "ring congruence enumeration is for small carriers");
        let congruences = ring_congruences(ring);
        let mut out = CheckList::new();
        out.push("idcon.bijection", {
            // I -> {(x,y) : x - y in I}
            let cosets: Vec<Vec<usize>> = self
                .ideals
                .sets
                .iter()
                .map(|&ideal| {
                    (0..ring.n())
                        .map(|x| {
                            // class id: least element of the coset x + I
                            ElemSet::from_iter(ideal.iter().map(|a| ring.add(x, a)))
                                .min_elem()
                                .unwrap()
                        })
                        .collect()
                })
                .collect();
            let mut images: Vec<Vec<usize>> = cosets.clone();
            images.sort();
            images.dedup();
            let mut enumerated: Vec<Vec<usize>> = congruences
                .iter()
                .map(|c| normalize_classes(c))
                .collect();
            enumerated.sort();
            enumerated.dedup();
            let images_norm: Vec<Vec<usize>> = {
                let mut v: Vec<Vec<usize>> = cosets.iter().map(|c| normalize_classes(c)).collect();
                v.sort();
                v.dedup();
                v
            };
            Outcome::require(
                images_norm == enumerated && images.len() == self.ideals.sets.len(),
                || "ideals and congruences do not correspond bijectively".into(),
            )
        });
        out.push("idcon.order_iso", {
            let refines = |a: &Vec<usize>, b: &Vec<usize>| {
                (0..a.len()).all(|x| {
                    (0..a.len()).all(|y| a[x] != a[y] || b[x] == b[y])
                })
            };
            let cosets: Vec<Vec<usize>> = self
                .ideals
                .sets
                .iter()
                .map(|&ideal| {
                    (0..ring.n())
                        .map(|x| {
                            ElemSet::from_iter(ideal.iter().map(|a| ring.add(x, a)))
                                .min_elem()
                                .unwrap()
                        })
                        .collect()
                })
                .collect();
            let ok = (0..self.ideals.sets.len()).all(|i| {
                (0..self.ideals.sets.len()).all(|j| {
                    self.ideals.sets[i].is_subset(self.ideals.sets[j])
                        == refines(&cosets[i], &cosets[j])
                })
            });
            Outcome::require(ok, || "inclusion and refinement diverge".into())
        });
        out.into_vec()
    }
}

fn normalize_classes(class_of: &[usize]) -> Vec<usize> {
    let mut map: Vec<usize> = Vec::new();
    class_of
        .iter()
        .map(|&c| match map.iter().position(|&m| m == c) {
            Some(i) => i,
            None => {
                map.push(c);
                map.len() - 1
            }
        })
        .collect()
}

/// All ring congruences by direct closure: the join-closure of the
/// principal congruences, each saturated under translation and
/// multiplication.
pub fn ring_congruences(ring: &FiniteCommRing) -> Vec<Vec<usize>> {
    let n = ring.n();
    let generated = |pairs: &[(usize, usize)]| -> Vec<usize> {
        let mut class_of: Vec<usize> = (0..n).collect();
        let merge = |class_of: &mut Vec<usize>, a: usize, b: usize| -> bool {
            let (ca, cb) = (class_of[a], class_of[b]);
            if ca == cb {
                return false;
            }
            let (lo, hi) = (ca.min(cb), ca.max(cb));
            for c in class_of.iter_mut() {
                if *c == hi {
                    *c = lo;
                }
            }
            true
        };
        for &(a, b) in pairs {
            merge(&mut class_of, a, b);
        }
        loop {
            let mut changed = false;
            for x in 0..n {
                for y in x + 1..n {
                    if class_of[x] != class_of[y] {
                        continue;
                    }
                    for c in 0..n {
                        changed |= merge(&mut class_of, ring.add(x, c), ring.add(y, c));
                        changed |= merge(&mut class_of, ring.mul(x, c), ring.mul(y, c));
                    }
                }
            }
            if !changed {
                return class_of;
            }
        }
    };
    let mut principals: Vec<Vec<(usize, usize)>> = Vec::new();
    let mut all: Vec<Vec<usize>> = vec![normalize_classes(&(0..n).collect::<Vec<_>>())];
    for a in 0..n {
        for b in a + 1..n {
            principals.push(vec![(a, b)]);
        }
    }
    let mut frontier: Vec<Vec<(usize, usize)>> = vec![Vec::new()];
    let mut seen_pairs: Vec<Vec<usize>> = all.clone();
    while let Some(base_pairs) = frontier.pop() {
        for p in &principals {
            let mut pairs = base_pairs.clone();
            pairs.extend_from_slice(p);
            let normalized = normalize_classes(&generated(&pairs));
            if !seen_pairs.contains(&normalized) {
                seen_pairs.push(normalized.clone());
                all.push(normalized);
                frontier.push(pairs);
            }
        }
    }
    all.sort();
    all
}

/// Small table rings used in the corpus: the four-element field, the
/// four-element ring with a nilpotent, and the eight-element local ring
/// with a non-principal maximal ideal.
pub mod samples {
    use super::FiniteCommRing;

    /// GF(4): polynomials over GF(2) modulo `x^2 + x + 1`.
    pub fn gf4() -> FiniteCommRing {
        build(2, |a, b| a ^ b, |a, b| {
            let mut prod = 0usize;
            for i in 0..2 {
                if b >> i & 1 == 1 {
                    prod ^= a << i;
                }
            }
            // reduce modulo x^2 + x + 1
            if prod >> 2 & 1 == 1 {
                prod ^= 0b111;
            }
            prod & 0b11
        })
    }

    /// GF(2)[x] / (x^2): four elements, `x` nilpotent.
    pub fn z2_dual_numbers() -> FiniteCommRing {
        build(2, |a, b| a ^ b, |a, b| {
            let (a0, a1) = (a & 1, a >> 1 & 1);
            let (b0, b1) = (b & 1, b >> 1 & 1);
            (a0 * b0) ^ (((a0 * b1) ^ (a1 * b0)) << 1)
        })
    }

    /// GF(2)[x,y] / (x^2, xy, y^2): eight elements; the maximal ideal
    /// (x, y) is not principal.
    pub fn f2_two_nilpotents() -> FiniteCommRing {
        build(3, |a, b| a ^ b, |a, b| {
            let (a0, a1, a2) = (a & 1, a >> 1 & 1, a >> 2 & 1);
            let (b0, b1, b2) = (b & 1, b >> 1 & 1, b >> 2 & 1);
            (a0 * b0) ^ (((a0 * b1) ^ (a1 * b0)) << 1) ^ (((a0 * b2) ^ (a2 * b0)) << 2)
        })
    }

    fn build(bits: usize, add: impl Fn(usize, usize) -> usize, mul: impl Fn(usize, usize) -> usize) -> FiniteCommRing {
        let n = 1 << bits;
        let add_t: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| add(a, b)).collect()).collect();
        let mul_t: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| mul(a, b)).collect()).collect();
        FiniteCommRing::from_tables(add_t, mul_t).expect("sample ring is valid")
    }
}

#[derive(Serialize)]
pub struct BridgeReport {
    pub semiprime: bool,
    pub ring_grid: Vec<(ConditionId, bool)>,
    pub id_grid: Vec<(ConditionId, bool)>,
    pub checks: Vec<Check>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(items: impl IntoIterator<Item = usize>) -> ElemSet {
        ElemSet::from_iter(items)
    }

    #[test]
    fn modular_ring_basics() {
        let z6 = FiniteCommRing::zn(6).unwrap();
        assert_eq!(z6.idempotents(), set([0, 1, 3, 4]));
        assert_eq!(FiniteCommRing::zn(4).unwrap().idempotents(), set([0, 1]));
        assert_eq!(z6.annihilator(set([2])), set([0, 3]));
        assert!(z6.idempotent_checks().iter().all(|c| !c.outcome.is_failure()));
    }

    #[test]
    fn table_validation_rejects_non_associative() {
        // tweak one multiplication entry of Z3
        let add = vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]];
        let mul = vec![vec![0, 0, 0], vec![0, 1, 2], vec![0, 2, 2]];
        let err = FiniteCommRing::from_tables(add, mul).unwrap_err();
        assert!(matches!(err, RingError::NotARing { .. }));
    }

    #[test]
    fn ideal_enumeration_and_oracle() {
        let z6 = FiniteCommRing::zn(6).unwrap();
        let ideals = z6.ideals();
        assert_eq!(ideals.len(), 4);
        assert_eq!(ideals, z6.ideals_naive());
        let id = IdealLattice::new(&z6);
        assert!(id.lattice().is_isomorphic(&FiniteLattice::boolean(2)));

        let z4 = FiniteCommRing::zn(4).unwrap();
        let id4 = IdealLattice::new(&z4);
        assert_eq!(id4.sets.len(), 3);
        assert!(id4.lattice().is_isomorphic(&FiniteLattice::chain(3)));
        // (2)(2) = (0) in Z4
        let two = id4.index_of(set([0, 2])).unwrap();
        let zero = id4.index_of(set([0])).unwrap();
        assert_eq!(id4.commutator.comm(two, two), zero);

        let f4 = samples::gf4();
        assert_eq!(IdealLattice::new(&f4).sets.len(), 2);
        assert_eq!(f4.idempotents().len(), 2);
        for r in [&z6, &z4, &f4, &samples::f2_two_nilpotents()] {
            assert_eq!(r.ideals(), r.ideals_naive());
        }
    }

    #[test]
    fn non_principal_ideal_exists_in_the_eight_element_sample() {
        let r = samples::f2_two_nilpotents();
        let non_principal = r
            .ideals()
            .into_iter()
            .find(|&i| r.elements().all(|g| r.principal_ideal(g) != i));
        // (x, y) = {0, x, y, x+y}
        assert_eq!(non_principal, Some(set([0, 2, 4, 6])));
    }

    #[test]
    fn radicals_and_semiprimality() {
        let z12 = FiniteCommRing::zn(12).unwrap();
        let ctx = RingConditionContext::new(&z12);
        let four = set([0, 4, 8]);
        let two = set([0, 2, 4, 6, 8, 10]);
        assert_eq!(ctx.radical_ideal(four), two);
        assert!(!ctx.is_semiprime());

        let z6 = FiniteCommRing::zn(6).unwrap();
        assert!(RingConditionContext::new(&z6).is_semiprime());
    }

    #[test]
    fn baer_examples() {
        let z6 = FiniteCommRing::zn(6).unwrap();
        let ctx = RingConditionContext::new(&z6);
        // Ann(3) = 2Z6 is generated by the idempotent 4, not by 2
        assert!(ctx.check(ConditionId::new(Family::C1, Kappa::All)).holds);

        let z4 = FiniteCommRing::zn(4).unwrap();
        let ctx = RingConditionContext::new(&z4);
        let verdict = ctx.check(ConditionId::new(Family::C1, Kappa::One));
        assert!(!verdict.holds);
        assert!(verdict.witness.unwrap().contains("{2}"));
    }

    #[test]
    fn empty_subset_instances_pass() {
        let z4 = FiniteCommRing::zn(4).unwrap();
        let ctx = RingConditionContext::new(&z4);
        // Ann(∅) = R: the (5°) instance is trivially satisfied
        let whole = z4.annihilator(ElemSet::EMPTY);
        assert_eq!(whole, z4.carrier());
        assert_eq!(z4.ideal_sum(whole, z4.annihilator(whole)), z4.carrier());
        drop(ctx);
    }

    #[test]
    fn squarefree_grid_collapses() {
        for n in [6u64, 10, 30] {
            let ring = FiniteCommRing::zn(n).unwrap();
            let ctx = RingConditionContext::new(&ring);
            assert!(ctx.is_semiprime());
            let grid = ctx.grid();
            assert!(grid.iter().all(|(_, v)| *v), "grid fails on Z{n}");
        }
        let z30 = FiniteCommRing::zn(30).unwrap();
        assert_eq!(z30.idempotents().len(), 8);
    }

    #[test]
    fn product_matches_crt_partner() {
        let z2 = FiniteCommRing::zn(2).unwrap();
        let z3 = FiniteCommRing::zn(3).unwrap();
        let prod = FiniteCommRing::product(&[&z2, &z3]).unwrap();
        let z6 = FiniteCommRing::zn(6).unwrap();
        let grid_prod = RingConditionContext::new(&prod).grid();
        let grid_z6 = RingConditionContext::new(&z6).grid();
        assert_eq!(grid_prod, grid_z6);
        assert!(IdealLattice::new(&prod)
            .lattice()
            .is_isomorphic(IdealLattice::new(&z6).lattice()));
    }

    #[test]
    fn bridge_reports_are_clean() {
        for ring in [
            FiniteCommRing::zn(4).unwrap(),
            FiniteCommRing::zn(6).unwrap(),
            FiniteCommRing::zn(12).unwrap(),
            samples::gf4(),
            samples::z2_dual_numbers(),
            samples::f2_two_nilpotents(),
        ] {
            let ctx = RingConditionContext::new(&ring);
            let report = ctx.baer_bridge_report();
            for c in &report.checks {
                assert!(!c.outcome.is_failure(), "{c:?} on {ring:?}");
            }
        }
    }

    #[test]
    fn reticulation_of_z12_is_the_square() {
        let z12 = FiniteCommRing::zn(12).unwrap();
        let ctx = RingConditionContext::new(&z12);
        let (retic, checks) = ctx.reticulation();
        assert!(checks.iter().all(|c| !c.outcome.is_failure()));
        assert!(retic.is_isomorphic(&FiniteLattice::boolean(2)));

        let z6 = FiniteCommRing::zn(6).unwrap();
        let ctx = RingConditionContext::new(&z6);
        let (retic, _) = ctx.reticulation();
        assert!(retic.is_isomorphic(IdealLattice::new(&z6).lattice()));

        let f4 = samples::gf4();
        let (retic, _) = RingConditionContext::new(&f4).reticulation();
        assert!(retic.is_isomorphic(&FiniteLattice::chain(2)));
    }

    #[test]
    fn congruences_match_ideals() {
        for ring in [
            FiniteCommRing::zn(4).unwrap(),
            FiniteCommRing::zn(6).unwrap(),
            samples::gf4(),
        ] {
            let ctx = RingConditionContext::new(&ring);
            assert_eq!(ring_congruences(&ring).len(), ctx.ideals.sets.len());
            for c in ctx.congruence_correspondence_checks() {
                assert!(!c.outcome.is_failure(), "{c:?} on {ring:?}");
            }
        }
    }
}
