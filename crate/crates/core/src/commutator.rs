//! Commutator lattices: a bounded lattice with a commutative binary
//! operation bounded by the meet and distributive over joins. Provides the
//! prime spectrum, radicals, the radical congruence and its quotient frame,
//! residuation and negation, Boolean-center theory, the construction of a
//! commutator from a congruence with distributive quotient, and the
//! equivalence report for the conditions (1)-(5)/(iv).
//!
//! On finite carriers the complete join-distributivity law reduces to its
//! binary and nullary instances, every element is compact, and finite
//! distributive lattices are frames; the degenerate forms of the
//! compactness-gated statements are asserted as such.

use crate::check::{Check, CheckList, Outcome};
use crate::conditions::{self, ConditionContext, ConditionId, Family, Kappa};
use crate::lattice::{FiniteLattice, LatticeCongruence};
use crate::set::ElemSet;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CommutatorError {
    #[error("commutator is not commutative at ({x},{y})")]
    NotCommutative { x: usize, y: usize },
    #[error("commutator exceeds the meet at ({x},{y})")]
    ExceedsMeet { x: usize, y: usize },
    #[error("commutator is not join-distributive at ({x},{y},{z})")]
    NotJoinDistributive { x: usize, y: usize, z: usize },
    #[error("commutator with the bottom is not the bottom at {x}")]
    NotNullaryDistributive { x: usize },
    #[error("the quotient is not distributive")]
    QuotientNotDistributive,
}

/// A finite commutator lattice: base lattice plus a validated table.
#[derive(Clone)]
pub struct CommutatorLattice {
    base: FiniteLattice,
    comm: Vec<u8>,
}

impl std::fmt::Debug for CommutatorLattice {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "CommutatorLattice(base={:?}, comm={:?})", self.base, self.comm)
    }
}

/// Prime spectrum, radicals, and the radical map of a commutator lattice.
#[derive(Debug, Clone)]
pub struct SpectrumData {
    /// Prime elements: p below the top with `[a,b] <= p` forcing `a <= p`
    /// or `b <= p`.
    pub spec: ElemSet,
    /// For each element, the primes above it.
    pub primes_above: Vec<ElemSet>,
    /// The radical of each element: the meet of the primes above it, the
    /// top when there are none.
    pub radical: Vec<usize>,
    /// Radical elements: the fixpoints (equivalently the image) of the
    /// radical map.
    pub radicals: ElemSet,
}

/// The congruence identifying elements with equal radicals, with the
/// projection onto block indices.
#[derive(Debug, Clone)]
pub struct EquivCongruence {
    pub cong: LatticeCongruence,
    pub lambda: Vec<usize>,
}

impl CommutatorLattice {
    /// Validates a table as a commutator: commutative, bounded by the meet,
    /// nullary and binary join distributivity (which generate the complete
    /// law on a finite carrier).
    pub fn new(base: FiniteLattice, comm: Vec<usize>) -> Result<CommutatorLattice, CommutatorError> {
        let n = base.n();
        assert_eq!(comm.len(), n * n);
        let at = |x: usize, y: usize| comm[x * n + y];
        for x in 0..n {
            if at(x, base.bottom()) != base.bottom() {
                return Err(CommutatorError::NotNullaryDistributive { x });
            }
            for y in 0..n {
                if at(x, y) != at(y, x) {
                    return Err(CommutatorError::NotCommutative { x, y });
                }
                if !base.leq(at(x, y), base.meet(x, y)) {
                    return Err(CommutatorError::ExceedsMeet { x, y });
                }
                for z in 0..n {
                    if at(x, base.join(y, z)) != base.join(at(x, y), at(x, z)) {
                        return Err(CommutatorError::NotJoinDistributive { x, y, z });
                    }
                }
            }
        }
        let comm = comm.into_iter().map(|v| v as u8).collect();
        Ok(CommutatorLattice { base, comm })
    }

    /// Builds the table from `[i,j] = k` triples; unlisted pairs default to
    /// the bottom. Triples are symmetrized.
    pub fn from_triples(
        base: FiniteLattice,
        triples: &[(usize, usize, usize)],
    ) -> Result<CommutatorLattice, CommutatorError> {
        let n = base.n();
        let mut table = vec![base.bottom(); n * n];
        for &(i, j, k) in triples {
            table[i * n + j] = k;
            table[j * n + i] = k;
        }
        CommutatorLattice::new(base, table)
    }

    /// The meet as commutator; valid exactly when the base is distributive
    /// (a finite frame).
    pub fn with_meet_commutator(base: FiniteLattice) -> Result<CommutatorLattice, CommutatorError> {
        let n = base.n();
        let table: Vec<usize> = (0..n * n).map(|i| base.meet(i / n, i % n)).collect();
        CommutatorLattice::new(base, table)
    }

    pub fn base(&self) -> &FiniteLattice {
        &self.base
    }

    pub fn comm(&self, x: usize, y: usize) -> usize {
        self.comm[x * self.base.n() + y] as usize
    }

    pub fn comm_table(&self) -> Vec<usize> {
        self.comm.iter().map(|&v| v as usize).collect()
    }

    pub fn is_meet(&self) -> bool {
        self.base
            .elements()
            .all(|x| self.base.elements().all(|y| self.comm(x, y) == self.base.meet(x, y)))
    }

    /// `[x,1] = x` for every element.
    pub fn is_unital(&self) -> bool {
        self.base.elements().all(|x| self.comm(x, self.base.top()) == x)
    }

    /// Iterated powers `x, [x,x], [x,[x,x]], ...` descend and stabilize;
    /// returns the stable value.
    pub fn stable_power(&self, x: usize) -> usize {
        let mut cur = x;
        loop {
            let next = self.comm(x, cur);
            if next == cur {
                return cur;
            }
            cur = next;
        }
    }

    /// First exponent at which the power sequence of `x` reaches `target`,
    /// if it ever does.
    fn power_reaches(&self, x: usize, target: usize) -> Option<u32> {
        let mut cur = x;
        let mut n = 1;
        loop {
            if cur == target {
                return Some(n);
            }
            let next = self.comm(x, cur);
            if next == cur {
                return None;
            }
            cur = next;
            n += 1;
        }
    }

    pub fn spectrum(&self) -> SpectrumData {
        let base = &self.base;
        let n = base.n();
        let mut spec = ElemSet::EMPTY;
        'cand: for p in 0..n {
            if p == base.top() {
                continue;
            }
            for a in 0..n {
                for b in a..n {
                    if base.leq(self.comm(a, b), p) && !base.leq(a, p) && !base.leq(b, p) {
                        continue 'cand;
                    }
                }
            }
            spec.insert(p);
        }
        let primes_above: Vec<ElemSet> = (0..n).map(|x| base.up_set(x) & spec).collect();
        let radical: Vec<usize> = (0..n).map(|x| base.meet_set(primes_above[x])).collect();
        let radicals = ElemSet::from_iter((0..n).filter(|&x| radical[x] == x));
        debug_assert_eq!(radicals, ElemSet::from_iter(radical.iter().copied()));
        SpectrumData { spec, primes_above, radical, radicals }
    }

    /// The congruence `a = b iff rho(a) = rho(b)`.
    pub fn radical_congruence(&self) -> EquivCongruence {
        let spectrum = self.spectrum();
        let cong = LatticeCongruence::new(&self.base, &spectrum.radical)
            .expect("the radical equivalence is a lattice congruence");
        let lambda = (0..self.base.n()).map(|x| cong.block_of(x)).collect();
        EquivCongruence { cong, lambda }
    }

    /// The quotient by the radical congruence, carrying the induced
    /// commutator (which coincides with the quotient meet), plus the
    /// projection.
    pub fn quotient_mod_equiv(&self) -> (CommutatorLattice, Vec<usize>) {
        let equiv = self.radical_congruence();
        let (q, proj) = self.base.quotient(&equiv.cong);
        let k = q.n();
        let mut table = vec![0usize; k * k];
        for bi in 0..k {
            for bj in 0..k {
                let x = equiv.cong.blocks()[bi].min_elem().unwrap();
                let y = equiv.cong.blocks()[bj].min_elem().unwrap();
                table[bi * k + bj] = proj[self.comm(x, y)];
            }
        }
        // the induced commutator is the quotient meet
        for bi in 0..k {
            for bj in 0..k {
                debug_assert_eq!(table[bi * k + bj], q.meet(bi, bj));
            }
        }
        let cl = CommutatorLattice::new(q, table).expect("quotient commutator is valid");
        (cl, proj)
    }

    /// On a finite carrier every element is compact, so the reticulation
    /// collapses to the quotient by the radical congruence.
    pub fn reticulation(&self) -> FiniteLattice {
        self.quotient_mod_equiv().0.base
    }

    /// `x -> y`: the largest `a` with `[x,a] <= y`. The candidate set is
    /// join-closed, so its join is its maximum; asserted.
    pub fn residuation(&self, x: usize, y: usize) -> usize {
        let base = &self.base;
        let set = ElemSet::from_iter(base.elements().filter(|&a| base.leq(self.comm(x, a), y)));
        let m = base.join_set(set);
        assert!(set.contains(m), "residuation candidate set has no maximum");
        m
    }

    pub fn negation(&self, x: usize) -> usize {
        self.residuation(x, self.base.bottom())
    }

    // ---------------------------------------------------------------
    // check batteries
    // ---------------------------------------------------------------

    /// Spectrum characterizations, the closure-operator laws of the radical
    /// map, and the compactness degenerations.
    pub fn spectrum_checks(&self) -> Vec<Check> {
        let base = &self.base;
        let s = self.spectrum();
        let irr = base.irreducibles();
        let top = base.top();
        let mut out = CheckList::new();

        out.push("smimaxspec.mi_form", {
            let alt = ElemSet::from_iter(
                irr.mi
                    .iter()
                    .filter(|&x| x != top)
                    .filter(|&x| base.elements().all(|a| !base.leq(self.comm(a, a), x) || base.leq(a, x))),
            );
            Outcome::require(alt == s.spec, || format!("Mi-based form {alt:?} != spec {:?}", s.spec))
        });
        out.push("smimaxspec.smi_form", {
            // finite length: primes are exactly the smi elements whose
            // successor does not square below them
            let alt = ElemSet::from_iter(s.spec.iter().filter(|&x| {
                irr.smi.contains(x) && {
                    let succ = irr.successor[x].unwrap();
                    !base.leq(self.comm(succ, succ), x)
                }
            }));
            let smi_based = ElemSet::from_iter(irr.smi.iter().filter(|&x| {
                let succ = irr.successor[x].unwrap();
                !base.leq(self.comm(succ, succ), x)
            }));
            Outcome::require(alt == s.spec && smi_based == s.spec, || {
                format!("Smi-based form {smi_based:?} != spec {:?}", s.spec)
            })
        });
        out.gated("smimaxspec.max", self.comm(top, top) == top, || {
            Outcome::require(irr.maximal.is_subset(s.spec), || "a maximal element is not prime".into())
        });
        out.push("smimaxspec.max_above", {
            // the top is compact on a finite carrier
            let ok = base
                .elements()
                .filter(|&x| x != top)
                .all(|x| !(base.up_set(x) & irr.maximal).is_empty() || irr.maximal.contains(x));
            Outcome::require(ok, || "element below the top with no maximal element above".into())
        });
        out.gated("smimaxspec.prime_above", self.comm(top, top) == top, || {
            let ok = base
                .elements()
                .filter(|&x| x != top)
                .all(|x| !s.primes_above[x].is_empty());
            Outcome::require(ok, || "element below the top with no prime above".into())
        });
        out.push("vrho.closure", {
            let mut res = Outcome::Holds;
            'all: for x in base.elements() {
                if !base.leq(x, s.radical[x]) || s.radical[s.radical[x]] != s.radical[x] {
                    res = Outcome::failed(format!("radical map not a closure at {}", base.label(x)));
                    break;
                }
                for y in base.elements() {
                    if base.leq(x, y) && !base.leq(s.radical[x], s.radical[y]) {
                        res = Outcome::failed("radical map not monotone".to_string());
                        break 'all;
                    }
                }
            }
            res
        });
        out.push("vrho.spec_radical", {
            Outcome::require(
                s.spec.is_subset(s.radicals) && s.radicals.contains(top),
                || "spectrum not inside the radicals".into(),
            )
        });
        out.push("onthecg", {
            let mut res = Outcome::Holds;
            'all: for a in base.elements() {
                for b in base.elements() {
                    let rm = s.radical[base.meet(a, b)];
                    if rm != s.radical[self.comm(a, b)]
                        || rm != base.meet(s.radical[a], s.radical[b])
                        || s.primes_above[base.meet(a, b)] != (s.primes_above[a] | s.primes_above[b])
                        || s.primes_above[self.comm(a, b)] != (s.primes_above[a] | s.primes_above[b])
                        || s.radical[base.join(a, b)]
                            != s.radical[base.join(s.radical[a], s.radical[b])]
                    {
                        res = Outcome::failed(format!(
                            "radical/prime identities fail at ({},{})",
                            base.label(a),
                            base.label(b)
                        ));
                        break 'all;
                    }
                }
            }
            res
        });
        let equiv = self.radical_congruence();
        out.push("cls1", {
            // on a finite carrier the top is compact, so [1,1]=1 iff the top
            // class is a singleton
            let unit_comm = self.comm(top, top) == top;
            let one_trivial = equiv.cong.block(top) == ElemSet::single(top);
            Outcome::require(unit_comm == one_trivial, || {
                "[1,1]=1 and trivial top class diverge".into()
            })
        });
        out.push("0rho", {
            let rho0_zero = s.radical[base.bottom()] == base.bottom();
            let zero_trivial = equiv.cong.block(base.bottom()) == ElemSet::single(base.bottom());
            let zero_radical = s.radicals.contains(base.bottom());
            Outcome::require(rho0_zero == zero_trivial && zero_trivial == zero_radical, || {
                "characterizations of rho(0)=0 diverge".into()
            })
        });
        out.push("cgrad.unique_radical", {
            let ok = equiv
                .cong
                .blocks()
                .iter()
                .all(|b| (*b & s.radicals).len() == 1 && (*b & s.radicals).contains(base.join_set(*b)));
            Outcome::require(ok, || "a class does not contain exactly one radical (its max)".into())
        });
        out.into_vec()
    }

    /// The radical congruence: validity, the generated-congruence
    /// identities, class structure, and the power criterion.
    pub fn thecong_checks(&self) -> Vec<Check> {
        let base = &self.base;
        let s = self.spectrum();
        let mut out = CheckList::new();

        let valid = LatticeCongruence::new(base, &s.radical);
        out.push(
            "thecong.congruence",
            match &valid {
                Ok(_) => Outcome::Holds,
                Err(e) => Outcome::failed(format!("radical equivalence invalid: {e}")),
            },
        );
        let Ok(equiv) = valid else {
            return out.into_vec();
        };
        out.push("thecong.preserves_commutator", {
            let mut res = Outcome::Holds;
            'all: for x in base.elements() {
                for x2 in base.elements() {
                    if !equiv.related(x, x2) {
                        continue;
                    }
                    for y in base.elements() {
                        for y2 in base.elements() {
                            if equiv.related(y, y2) && !equiv.related(self.comm(x, y), self.comm(x2, y2)) {
                                res = Outcome::failed("commutator not preserved".to_string());
                                break 'all;
                            }
                        }
                    }
                }
            }
            res
        });
        out.push("thecong.comm_meet_related", {
            let ok = base.elements().all(|a| {
                base.elements()
                    .all(|b| equiv.related(self.comm(a, b), base.meet(a, b)))
            });
            Outcome::require(ok, || "[a,b] and a^b in different classes".into())
        });

        let sigma = base.congruence_generated(
            &base
                .elements()
                .map(|x| (x, s.radical[x]))
                .collect::<Vec<_>>(),
        );
        let mut comm_pairs = Vec::new();
        let mut square_pairs = Vec::new();
        for x in base.elements() {
            square_pairs.push((x, self.comm(x, x)));
            for y in base.elements() {
                comm_pairs.push((base.meet(x, y), self.comm(x, y)));
            }
        }
        let sim = base.congruence_generated(&comm_pairs);
        let approx = base.congruence_generated(&square_pairs);
        out.push("thecong.generators", {
            Outcome::require(
                sigma == equiv && sim.is_refinement_of(&equiv) && approx.is_refinement_of(&sim),
                || "generated-congruence chain fails".into(),
            )
        });
        out.push("thecong.zero_class", {
            Outcome::require(
                equiv.block(base.bottom()) == base.down_set(s.radical[base.bottom()]),
                || "0-class is not the principal ideal of rho(0)".into(),
            )
        });
        out.push("thecong.class_max", {
            let ok = base.elements().all(|x| {
                let (_, max) = base.class_extrema(&equiv, x);
                let above_radicals = base.up_set(x) & s.radicals;
                let min_above = above_radicals.iter().all(|r| base.leq(s.radical[x], r))
                    && above_radicals.contains(s.radical[x]);
                s.radical[x] == max && min_above
            });
            Outcome::require(ok, || "rho(x) differs from max(x/≡) or min([x) ∩ R(L))".into())
        });
        out.push("thecong.3", {
            let mut res = Outcome::Holds;
            'all: for x in base.elements() {
                let (min, _) = base.class_extrema(&equiv, x);
                for a in base.up_set(min).iter() {
                    if self.comm(a, min) != min {
                        res = Outcome::failed(format!(
                            "[a, min] != min at a={}, class of {}",
                            base.label(a),
                            base.label(x)
                        ));
                        break 'all;
                    }
                }
            }
            res
        });
        // power hypothesis: some power of rho(x) reaches the class minimum
        let power_data: Vec<Option<u32>> = base
            .elements()
            .map(|x| {
                let (min, _) = base.class_extrema(&equiv, x);
                self.power_reaches(s.radical[x], min)
            })
            .collect();
        let hypothesis = power_data.iter().all(|d| d.is_some());
        out.gated("thecong.4", hypothesis, || {
            if sim != equiv {
                return Outcome::failed("≡ differs from Cg({(x^y, [x,y])}) under the power hypothesis");
            }
            for x in self.base.elements() {
                let (min, _) = self.base.class_extrema(&equiv, x);
                let n_x = power_data[x].unwrap();
                for a in equiv.block(x).iter() {
                    // powers descend, so reaching min at n_x pins all later ones
                    let mut cur = a;
                    for _ in 1..n_x {
                        cur = self.comm(a, cur);
                    }
                    if cur != min {
                        return Outcome::failed(format!(
                            "a^n != min(x/≡) at a={}, n={}",
                            self.base.label(a),
                            n_x
                        ));
                    }
                }
            }
            Outcome::Holds
        });
        out.into_vec()
    }

    /// The radical frame `(R(L), join-then-radical, meet)` and its
    /// isomorphism with the quotient.
    pub fn radical_frame(&self) -> (FiniteLattice, Vec<usize>, Vec<Check>) {
        let base = &self.base;
        let s = self.spectrum();
        let elems: Vec<usize> = s.radicals.iter().collect();
        let index_of = |r: usize| elems.iter().position(|&e| e == r).unwrap();
        let labels = elems.iter().map(|&e| base.label(e).to_string()).collect();
        let mut up = vec![ElemSet::EMPTY; elems.len()];
        for (i, &x) in elems.iter().enumerate() {
            for (j, &y) in elems.iter().enumerate() {
                if base.leq(x, y) {
                    up[i].insert(j);
                }
            }
        }
        let frame = FiniteLattice::from_order(labels, up).expect("radicals form a lattice");
        let mut out = CheckList::new();
        out.push("framerho.ops", {
            let mut res = Outcome::Holds;
            'all: for (i, &x) in elems.iter().enumerate() {
                for (j, &y) in elems.iter().enumerate() {
                    // meet inherited, join deflected through the radical map
                    if elems[frame.meet(i, j)] != base.meet(x, y)
                        || elems[frame.join(i, j)] != s.radical[base.join(x, y)]
                    {
                        res = Outcome::failed("radical-frame operations diverge".to_string());
                        break 'all;
                    }
                }
            }
            res
        });
        out.push("framerho.frame", {
            Outcome::require(
                frame.is_distributive() && elems[frame.bottom()] == s.radical[base.bottom()]
                    && elems[frame.top()] == base.top(),
                || "radical lattice is not a frame with the expected bounds".into(),
            )
        });
        let (quotient, proj) = self.quotient_mod_equiv();
        out.push("framerho.iso", {
            // h(x/≡) = rho(x) is a bounded-lattice isomorphism
            let mut res = Outcome::require(quotient.base.n() == frame.n(), || "size mismatch".into());
            if let Outcome::Holds = res {
                let image: Vec<usize> = (0..quotient.base.n())
                    .map(|b| {
                        let x = base.elements().find(|&x| proj[x] == b).unwrap();
                        index_of(s.radical[x])
                    })
                    .collect();
                let bijective = {
                    let mut seen = image.clone();
                    seen.sort_unstable();
                    seen.dedup();
                    seen.len() == frame.n()
                };
                let morphism = (0..quotient.base.n()).all(|a| {
                    (0..quotient.base.n()).all(|b| {
                        image[quotient.base.meet(a, b)] == frame.meet(image[a], image[b])
                            && image[quotient.base.join(a, b)] == frame.join(image[a], image[b])
                    })
                });
                res = Outcome::require(bijective && morphism, || {
                    "h(x/≡) = rho(x) is not an isomorphism".into()
                });
            }
            res
        });
        out.push("framerho.spec", {
            // with meet as commutator on R(L), the primes are unchanged
            let meet_cl = CommutatorLattice::with_meet_commutator(frame.clone());
            match meet_cl {
                Err(e) => Outcome::failed(format!("radical frame rejects the meet commutator: {e}")),
                Ok(cl) => {
                    let sub_spec: ElemSet =
                        ElemSet::from_iter(cl.spectrum().spec.iter().map(|i| elems[i]));
                    Outcome::require(sub_spec == s.spec, || {
                        "spectrum of the radical frame differs".into()
                    })
                }
            }
        });
        out.push("framerho.quotient_spec", {
            // in the quotient, the primes are the projected primes and every
            // element is radical
            let qs = quotient.spectrum();
            let projected = ElemSet::from_iter(s.spec.iter().map(|p| proj[p]));
            let all_radical = qs.radicals == quotient.base.carrier();
            let zero_radical = qs.radical[quotient.base.bottom()] == quotient.base.bottom();
            Outcome::require(qs.spec == projected && all_radical && zero_radical, || {
                "quotient spectrum/radicals diverge".into()
            })
        });
        (frame, elems, out.into_vec())
    }

    /// Residuation laws and the negation/annihilator link.
    pub fn residuation_checks(&self) -> Vec<Check> {
        let base = &self.base;
        let s = self.spectrum();
        let rho0 = s.radical[base.bottom()] == base.bottom();
        let mut out = CheckList::new();
        out.push("residuation.adjunction", {
            let mut res = Outcome::Holds;
            'all: for x in base.elements() {
                for y in base.elements() {
                    let r = self.residuation(y, x);
                    for a in base.elements() {
                        if base.leq(self.comm(a, y), x) != base.leq(a, r) {
                            res = Outcome::failed("residuation adjunction fails".to_string());
                            break 'all;
                        }
                    }
                    if self.residuation(x, base.top()) != base.top() {
                        res = Outcome::failed("x -> 1 != 1".to_string());
                        break 'all;
                    }
                }
            }
            res
        });
        out.push("residuation.unit", {
            let mut res = Outcome::Holds;
            'all: for y in base.elements() {
                if self.comm(y, base.top()) != y {
                    continue;
                }
                for z in base.elements() {
                    if (self.residuation(y, z) == base.top()) != base.leq(y, z) {
                        res = Outcome::failed("y -> z = 1 iff y <= z fails".to_string());
                        break 'all;
                    }
                }
            }
            res
        });
        out.gated("negann", rho0, || {
            for x in base.elements() {
                let ann = conditions::annihilator(base, ElemSet::single(x)).members;
                let max = base.join_set(ann);
                if !ann.contains(max) || self.negation(x) != max {
                    return Outcome::failed(format!("negation != max annihilator at {}", base.label(x)));
                }
            }
            Outcome::Holds
        });
        out.into_vec()
    }

    /// Boolean-center theory under the unitality and radical-zero gates.
    pub fn boolean_center_theory(&self) -> Vec<Check> {
        let base = &self.base;
        let ctx = ConditionContext::new(base);
        let center = &ctx.center;
        let fam = &ctx.family;
        let s = self.spectrum();
        let equiv = self.radical_congruence();
        let (quotient, proj) = self.quotient_mod_equiv();
        let ctx_q = ConditionContext::new(quotient.base());
        let rho0 = s.radical[base.bottom()] == base.bottom();
        let one_trivial = equiv.cong.block(base.top()) == ElemSet::single(base.top());
        let unital = self.is_unital();
        let project = |set: ElemSet| ElemSet::from_iter(set.iter().map(|x| proj[x]));
        let mut out = CheckList::new();

        out.push("meetbool", {
            let mut res = Outcome::Holds;
            'all: for e in center.members.iter() {
                for a in base.elements() {
                    let ea = base.meet(e, a);
                    if self.comm(base.top(), ea) == ea && self.comm(e, a) != ea {
                        res = Outcome::failed(format!(
                            "e^a != [e,a] at e={}, a={}",
                            base.label(e),
                            base.label(a)
                        ));
                        break 'all;
                    }
                }
            }
            res
        });
        out.gated("boolcenter", unital, || {
            for e in center.members.iter() {
                for a in base.elements() {
                    if self.comm(e, a) != base.meet(e, a) {
                        return Outcome::failed("[e,a] != e^a for central e");
                    }
                }
            }
            if !center.is_sublattice {
                return Outcome::failed("center is not a sublattice");
            }
            if !center.is_boolean {
                return Outcome::failed("center is not Boolean");
            }
            for e in center.members.iter() {
                let neg = self.negation(e);
                let ann = conditions::annihilator(base, ElemSet::single(e)).members;
                let ann_max = base.join_set(ann);
                if !ann.contains(ann_max) || neg != ann_max {
                    return Outcome::failed("negation of a central element is not max Ann(e)");
                }
                if !center.members.contains(neg)
                    || base.meet(e, neg) != base.bottom()
                    || base.join(e, neg) != base.top()
                {
                    return Outcome::failed("negation is not the complement in the center");
                }
            }
            Outcome::Holds
        });
        out.gated("annbool", rho0 && unital, || {
            for e in center.members.iter() {
                let neg = self.negation(e);
                let ann = conditions::annihilator(base, ElemSet::single(neg)).members;
                if base.down_set(e) != ann {
                    return Outcome::failed("(e] != Ann(neg e)");
                }
            }
            Outcome::Holds
        });
        out.gated("charstone.principal_negation", rho0, || {
            for x in base.elements() {
                let ann = conditions::annihilator(base, ElemSet::single(x)).members;
                if ann != base.down_set(self.negation(x)) {
                    return Outcome::failed(format!("Ann({}) != (neg]", base.label(x)));
                }
            }
            Outcome::Holds
        });
        out.gated("charstone.stone_iff_central_negations", rho0, || {
            let stone = ctx.is_stone();
            let all_central = base.elements().all(|x| center.members.contains(self.negation(x)));
            Outcome::require(stone == all_central, || "Stone iff negations central fails".into())
        });
        out.gated("charstone.central_pann", rho0 && unital, || {
            let ok = center.members.iter().all(|e| {
                base.elements()
                    .any(|x| fam.all[fam.pann_of[x]].members == base.down_set(e))
            });
            Outcome::require(ok, || "(e] outside PAnn for central e".into())
        });
        let central_ideals: Vec<ElemSet> = {
            let mut v: Vec<ElemSet> = center.members.iter().map(|e| base.down_set(e)).collect();
            v.sort();
            v.dedup();
            v
        };
        out.gated("boolid.center_of_ideals", rho0 && unital, || {
            // complemented ideals of Id(L) are exactly the central
            // principal ideals
            let mut complemented: Vec<ElemSet> = base
                .elements()
                .filter(|&x| {
                    base.elements().any(|y| {
                        base.meet(x, y) == base.bottom() && base.join(x, y) == base.top()
                    })
                })
                .map(|x| base.down_set(x))
                .collect();
            complemented.sort();
            complemented.dedup();
            if complemented != central_ideals {
                return Outcome::failed("B(Id(L)) differs from the central principal ideals");
            }
            let in_pann = central_ideals.iter().all(|&s| {
                base.elements()
                    .any(|x| fam.all[fam.pann_of[x]].members == s)
            });
            Outcome::require(in_pann, || "central ideal outside PAnn".into())
        });
        out.gated("boolid.stone_iff", rho0 && unital, || {
            let stone = ctx.is_stone();
            Outcome::require(stone == (fam.pann_sets() == central_ideals), || {
                "Stone iff PAnn = B(Id(L)) fails".into()
            })
        });
        out.gated("boolcp.degenerate", one_trivial, || {
            // all elements are compact on a finite carrier; the surviving
            // content is the existence of primes above every non-top class
            let ok = quotient
                .base()
                .elements()
                .filter(|&b| b != quotient.base().top())
                .all(|b| !quotient.spectrum().primes_above[b].is_empty());
            Outcome::require(ok, || "quotient element below the top with no prime above".into())
        });
        out.gated("booleq", one_trivial && rho0, || {
            let image = project(center.members);
            if image != ctx_q.center.members {
                return Outcome::failed("B(L)/≡ != B(L/≡)");
            }
            for x in base.elements() {
                if ctx_q.center.members.contains(proj[x]) != center.members.contains(x) {
                    return Outcome::failed("central membership diverges through the projection");
                }
            }
            Outcome::Holds
        });
        // Boolean-morphism properties of the restricted projection
        let image = project(center.members);
        let injective = image.len() == center.members.len();
        out.gated("boolmorph.morphism", unital, || {
            if !image.is_subset(ctx_q.center.members) {
                return Outcome::failed("projection leaves the quotient center");
            }
            for e in center.members.iter() {
                let neg = self.negation(e);
                if quotient.base().meet(proj[e], proj[neg]) != quotient.base().bottom()
                    || quotient.base().join(proj[e], proj[neg]) != quotient.base().top()
                {
                    return Outcome::failed("complements not preserved");
                }
            }
            Outcome::Holds
        });
        out.gated("boolmorph.injectivity_criteria", unital, || {
            let crit_one = (equiv.cong.block(base.top()) & center.members) == ElemSet::single(base.top());
            let crit_zero =
                (equiv.cong.block(base.bottom()) & center.members) == ElemSet::single(base.bottom());
            Outcome::require(injective == crit_one && crit_one == crit_zero, || {
                "injectivity criteria diverge".into()
            })
        });
        out.gated("boolmorph.injective", unital && (rho0 || one_trivial), || {
            Outcome::require(injective, || "restricted projection not injective".into())
        });
        out.gated("boolmorph.iso", unital && rho0, || {
            // the top is compact here, so the stronger gate collapses to rho0
            Outcome::require(injective && image == ctx_q.center.members, || {
                "restricted projection not an isomorphism".into()
            })
        });
        let h3 = one_trivial && rho0 && unital;
        out.gated("boollambda.order_reflection", h3, || {
            for e in center.members.iter() {
                for a in base.elements() {
                    if quotient.base().leq(proj[a], proj[e]) != base.leq(a, e) {
                        return Outcome::failed("lambda(a) <= lambda(e) iff a <= e fails");
                    }
                }
            }
            Outcome::Holds
        });
        out.gated("boollambda.central_radical", h3, || {
            for e in center.members.iter() {
                let (_, max) = base.class_extrema(&equiv.cong, e);
                if max != e || s.radical[e] != e {
                    return Outcome::failed("central element not the radical maximum of its class");
                }
            }
            Outcome::require(center.members.is_subset(s.radicals), || {
                "center not inside the radicals".into()
            })
        });
        out.gated("boollambda.complemented", h3 && center.members == base.carrier(), || {
            let boolean = base.is_distributive() && conditions::is_complemented(base);
            Outcome::require(s.radicals == base.carrier() && self.is_meet() && boolean, || {
                "complemented base does not collapse to a Boolean frame".into()
            })
        });
        out.gated("boollambda.principal_vs_ann", h3, || {
            for ann in &fam.all {
                for e in center.members.iter() {
                    let lhs = project(base.down_set(e)) == project(ann.members);
                    if lhs != (base.down_set(e) == ann.members) {
                        return Outcome::failed("lambda((e]) = lambda(Ann U) iff fails");
                    }
                }
                for a in base.elements() {
                    let pr = base.down_set(s.radical[a]);
                    let lhs = project(pr) == project(ann.members);
                    if lhs != (pr == ann.members) {
                        return Outcome::failed("lambda((rho a]) = lambda(Ann U) iff fails");
                    }
                }
            }
            Outcome::Holds
        });
        out.gated("suchrho.binary", rho0, || {
            for a in base.elements() {
                for b in base.elements() {
                    if (base.meet(a, b) == base.bottom()) != (self.comm(a, b) == base.bottom()) {
                        return Outcome::failed(format!(
                            "a^b=0 iff [a,b]=0 fails at ({},{})",
                            base.label(a),
                            base.label(b)
                        ));
                    }
                }
            }
            Outcome::Holds
        });
        out.gated("suchrho.ann_form", rho0, || {
            for ann in &fam.all {
                let via_comm = ElemSet::from_iter(base.elements().filter(|&x| {
                    ann.source.iter().all(|u| self.comm(x, u) == base.bottom())
                }));
                if via_comm != ann.members {
                    return Outcome::failed("Ann via the commutator diverges");
                }
            }
            Outcome::Holds
        });
        out.gated("annid", rho0, || {
            for ann in &fam.all {
                let join = base.join_set(ann.source);
                let through_ideal =
                    conditions::annihilator(base, base.ideal_closure(ann.source)).members;
                let through_join =
                    conditions::annihilator(base, ElemSet::single(join)).members;
                if ann.members != through_ideal || ann.members != through_join {
                    return Outcome::failed("Ann(U) = Ann((U]) = Ann(vU) fails");
                }
                if !base.is_ideal(ann.members) {
                    return Outcome::failed("annihilator is not a principal ideal");
                }
            }
            let mut all: Vec<ElemSet> = fam.all.iter().map(|a| a.members).collect();
            all.sort();
            if all != fam.pann_sets() {
                return Outcome::failed("Ann family differs from PAnn");
            }
            for a in base.elements() {
                for b in base.elements() {
                    let lhs = conditions::annihilator(base, ElemSet::single(base.join(a, b))).members;
                    let rhs = fam.all[fam.pann_of[a]].members & fam.all[fam.pann_of[b]].members;
                    if lhs != rhs {
                        return Outcome::failed("Ann(a v b) != Ann(a) ∩ Ann(b)");
                    }
                }
            }
            Outcome::require(ctx.is_stone() == ctx.is_strongly_stone(), || {
                "Stone and strongly Stone diverge under rho(0)=0".into()
            })
        });
        out.gated("iv_remark.quotient", true, || {
            // the quotient is a frame, so (4) collapses to (iv) there
            let iv = ctx_q.check(ConditionId::iv()).holds;
            for kappa in Kappa::ALL {
                if ctx_q.check(ConditionId::new(Family::C4, kappa)).holds != iv {
                    return Outcome::failed("(4) and (iv) diverge on the quotient frame");
                }
            }
            Outcome::Holds
        });
        out.gated("iv_remark.base", rho0, || {
            let iv = ctx.check(ConditionId::iv()).holds;
            for kappa in Kappa::ALL {
                if ctx.check(ConditionId::new(Family::C4, kappa)).holds != iv {
                    return Outcome::failed("(4) and (iv) diverge under rho(0)=0");
                }
            }
            Outcome::Holds
        });
        out.into_vec()
    }

    /// `R(L) = L` against the identity congruence and the meet commutator;
    /// the 0-regular case.
    pub fn allradical_checks(&self) -> Vec<Check> {
        let base = &self.base;
        let s = self.spectrum();
        let equiv = self.radical_congruence();
        let all_radical = s.radicals == base.carrier();
        let mut out = CheckList::new();
        out.push("allradical.delta", {
            Outcome::require(all_radical == equiv.cong.is_delta(), || {
                "R(L)=L iff ≡=Δ fails".into()
            })
        });
        out.push("allradical.meet", {
            // on a finite (hence algebraic) carrier the implication is an
            // equivalence
            Outcome::require(all_radical == self.is_meet(), || {
                "R(L)=L iff the commutator is the meet fails".into()
            })
        });
        out.gated("allradical.frame", all_radical, || {
            Outcome::require(base.is_distributive(), || "all-radical base is not a frame".into())
        });
        out.gated(
            "allradical.0regular",
            base.is_0_regular() && s.radical[base.bottom()] == base.bottom(),
            || {
                Outcome::require(all_radical && self.is_meet(), || {
                    "0-regular with rho(0)=0 but not all-radical".into()
                })
            },
        );
        out.into_vec()
    }

    /// The equivalence grid on the base lattice, the per-family transfer to
    /// the quotient frame, and the cross-cardinality (3)-(5) equivalence.
    pub fn ourdavey_report(&self) -> OurDaveyReport {
        let base = &self.base;
        let ctx = ConditionContext::new(base);
        let (quotient, _) = self.quotient_mod_equiv();
        let ctx_q = ConditionContext::new(quotient.base());
        let s = self.spectrum();
        let equiv = self.radical_congruence();
        let rho0 = s.radical[base.bottom()] == base.bottom();
        let one_trivial = equiv.cong.block(base.top()) == ElemSet::single(base.top());
        let unital = self.is_unital();

        let verdicts: Vec<(ConditionId, bool)> = ConditionId::grid()
            .into_iter()
            .map(|c| (c, ctx.check(c).holds))
            .collect();
        let q_verdicts: Vec<(ConditionId, bool)> = ConditionId::grid()
            .into_iter()
            .map(|c| (c, ctx_q.check(c).holds))
            .collect();
        let held = |c: ConditionId| verdicts.iter().find(|(x, _)| *x == c).unwrap().1;
        let q_held = |c: ConditionId| q_verdicts.iter().find(|(x, _)| *x == c).unwrap().1;

        let mut out = CheckList::new();
        for kappa in Kappa::ALL {
            let c = |f: Family| ConditionId::new(f, kappa);
            let tag = |name: &str| format!("{name}[{kappa:?}]");
            out.gated(tag("echiv1.down"), rho0, || {
                Outcome::require(!held(c(Family::C1)) || q_held(c(Family::C1)), || {
                    "(1) does not descend to the quotient".into()
                })
            });
            out.gated(tag("echiv1.equiv"), rho0 && one_trivial && unital, || {
                Outcome::require(held(c(Family::C1)) == q_held(c(Family::C1)), || {
                    "(1) equivalence with the quotient fails".into()
                })
            });
            out.gated(tag("echiv2.down"), rho0 && one_trivial, || {
                Outcome::require(!held(c(Family::C2)) || q_held(c(Family::C2)), || {
                    "(2) does not descend".into()
                })
            });
            out.gated(tag("echiv2.equiv"), rho0 && one_trivial && unital, || {
                Outcome::require(held(c(Family::C2)) == q_held(c(Family::C2)), || {
                    "(2) equivalence fails".into()
                })
            });
            out.gated(tag("echiv3"), rho0, || {
                Outcome::require(held(c(Family::C3)) == q_held(c(Family::C3)), || {
                    "(3) equivalence fails".into()
                })
            });
            out.gated(tag("echiv4"), rho0, || {
                let iv = held(ConditionId::iv());
                Outcome::require(
                    held(c(Family::C4)) == iv && q_held(c(Family::C4)) == iv,
                    || "(iv), (4) on L and (4) on the quotient diverge".into(),
                )
            });
            out.push(
                tag("echiv5.down"),
                Outcome::require(!held(c(Family::C5)) || q_held(c(Family::C5)), || {
                    "(5) does not descend".into()
                }),
            );
            out.gated(tag("echiv5.equiv"), rho0 && one_trivial, || {
                Outcome::require(held(c(Family::C5)) == q_held(c(Family::C5)), || {
                    "(5) equivalence fails".into()
                })
            });
        }
        out.gated("strgst", rho0 && one_trivial && unital, || {
            let vals = [
                ctx.is_stone(),
                ctx.is_strongly_stone(),
                ctx_q.is_stone(),
                ctx_q.is_strongly_stone(),
            ];
            Outcome::require(vals.iter().all(|&v| v == vals[0]), || {
                "Stone variants diverge between L and the quotient".into()
            })
        });
        out.gated("ourdavey.grid", rho0 && one_trivial && unital, || {
            let all: Vec<bool> = verdicts.iter().map(|(_, v)| *v).collect();
            Outcome::require(all.iter().all(|&v| v == all[0]), || {
                "the sixteen-entry grid does not collapse".into()
            })
        });
        out.gated("3eq5", rho0, || {
            let vals: Vec<bool> = Kappa::ALL
                .iter()
                .flat_map(|&k| {
                    [
                        held(ConditionId::new(Family::C3, k)),
                        held(ConditionId::new(Family::C5, k)),
                    ]
                })
                .collect();
            Outcome::require(vals.iter().all(|&v| v == vals[0]), || {
                "(3) and (5) diverge across cardinalities".into()
            })
        });
        OurDaveyReport {
            rho0,
            one_class_trivial: one_trivial,
            unital,
            verdicts,
            quotient_verdicts: q_verdicts,
            checks: out.into_vec(),
        }
    }

    /// Every check battery in one list; the commutator suite runs this.
    pub fn full_report(&self) -> Vec<Check> {
        let mut checks = self.spectrum_checks();
        checks.extend(self.thecong_checks());
        checks.extend(self.radical_frame().2);
        checks.extend(self.residuation_checks());
        checks.extend(self.boolean_center_theory());
        checks.extend(self.allradical_checks());
        checks.extend(self.ourdavey_report().checks);
        checks
    }
}

#[derive(Debug)]
pub struct OurDaveyReport {
    pub rho0: bool,
    pub one_class_trivial: bool,
    pub unital: bool,
    pub verdicts: Vec<(ConditionId, bool)>,
    pub quotient_verdicts: Vec<(ConditionId, bool)>,
    pub checks: Vec<Check>,
}

/// The pointwise commutator induced by a congruence: `[x,y] = min((x^y)/theta)`.
/// Valid whenever the quotient is distributive (a finite frame).
pub fn commutator_from_congruence(
    m: &FiniteLattice,
    theta: &LatticeCongruence,
) -> Result<CommutatorLattice, CommutatorError> {
    let (q, _) = m.quotient(theta);
    if !q.is_distributive() {
        return Err(CommutatorError::QuotientNotDistributive);
    }
    let n = m.n();
    let mut table = vec![0usize; n * n];
    for x in 0..n {
        for y in 0..n {
            table[x * n + y] = m.class_extrema(theta, m.meet(x, y)).0;
        }
    }
    CommutatorLattice::new(m.clone(), table)
}

/// The construction plus its regeneration and characterization claims.
pub fn commutator_from_congruence_checks(
    m: &FiniteLattice,
    theta: &LatticeCongruence,
) -> (Option<CommutatorLattice>, Vec<Check>) {
    let mut out = CheckList::new();
    let cl = match commutator_from_congruence(m, theta) {
        Ok(cl) => cl,
        Err(CommutatorError::QuotientNotDistributive) => {
            return (None, out.into_vec());
        }
        Err(e) => {
            out.push("commofcg.valid", Outcome::failed(format!("{e}")));
            return (None, out.into_vec());
        }
    };
    out.push("commofcg.valid", Outcome::Holds);
    let class_max: Vec<usize> = m.elements().map(|x| m.class_extrema(theta, x).1).collect();
    let class_min: Vec<usize> = m.elements().map(|x| m.class_extrema(theta, x).0).collect();

    out.push("commofcg.generators", {
        let mut comm_pairs = Vec::new();
        let mut square_pairs = Vec::new();
        let mut extrema_pairs = Vec::new();
        let mut max_pairs = Vec::new();
        for x in m.elements() {
            square_pairs.push((x, cl.comm(x, x)));
            extrema_pairs.push((class_min[x], class_max[x]));
            max_pairs.push((x, class_max[x]));
            for y in m.elements() {
                comm_pairs.push((m.meet(x, y), cl.comm(x, y)));
            }
        }
        let all_equal = [comm_pairs, square_pairs, extrema_pairs, max_pairs]
            .iter()
            .all(|pairs| m.congruence_generated(pairs) == *theta);
        Outcome::require(all_equal, || "a generator set fails to regenerate theta".into())
    });
    out.push("commofcg.spec", {
        let spec = cl.spectrum().spec;
        let expected = ElemSet::from_iter(
            m.irreducibles()
                .mi
                .iter()
                .filter(|&x| x != m.top())
                .filter(|&x| class_max[x] == x && !theta.related(x, m.top())),
        );
        Outcome::require(spec == expected, || {
            format!("spectrum {spec:?} differs from Mi ∩ class maxima {expected:?}")
        })
    });
    out.push("commofcg.radical", {
        let s = cl.spectrum();
        let maxima = ElemSet::from_iter(class_max.iter().copied());
        let rho_is_max = m.elements().all(|y| s.radical[y] == class_max[y]);
        let regen = m.congruence_generated(
            &m.elements().map(|x| (x, s.radical[x])).collect::<Vec<_>>(),
        ) == *theta;
        Outcome::require(s.radicals == maxima && rho_is_max && regen, || {
            "radicals differ from the class maxima".into()
        })
    });
    (Some(cl), out.into_vec())
}

/// Pointwise identities for congruence-induced commutators: intersection
/// turns into pointwise join, refinement reverses the order, and any
/// operation dominates the commutator of the congruence it generates.
pub fn commsofcgs_checks(m: &FiniteLattice) -> Vec<Check> {
    let congruences = m.congruences();
    let min_of = |theta: &LatticeCongruence, x: usize| m.class_extrema(theta, x).0;
    let mut out = CheckList::new();
    out.push("commsofcgs.intersection", {
        let mut res = Outcome::Holds;
        'all: for a in &congruences {
            for b in &congruences {
                let meet_cong = a.intersect(b);
                for x in m.elements() {
                    if min_of(&meet_cong, x) != m.join(min_of(a, x), min_of(b, x)) {
                        res = Outcome::failed("min(x/(θ∩ζ)) != min(x/θ) v min(x/ζ)".to_string());
                        break 'all;
                    }
                    for y in m.elements() {
                        let xy = m.meet(x, y);
                        if min_of(&meet_cong, xy) != m.join(min_of(a, xy), min_of(b, xy)) {
                            res = Outcome::failed("[.,.]_{θ∩ζ} != [.,.]_θ v [.,.]_ζ".to_string());
                            break 'all;
                        }
                    }
                }
            }
        }
        res
    });
    out.push("commsofcgs.monotone", {
        let mut res = Outcome::Holds;
        'all: for a in &congruences {
            for b in &congruences {
                if !b.is_refinement_of(a) {
                    continue;
                }
                for x in m.elements() {
                    for y in m.elements() {
                        let xy = m.meet(x, y);
                        if !m.leq(min_of(a, xy), min_of(b, xy)) {
                            res = Outcome::failed("refinement does not reverse the commutator".to_string());
                            break 'all;
                        }
                    }
                }
            }
        }
        res
    });
    out.push("commsofcgs.dominates", {
        let n = m.n();
        let mut res = Outcome::Holds;
        let check_table = |table: &dyn Fn(usize, usize) -> usize| -> bool {
            let mut pairs = Vec::with_capacity(n * n);
            for x in 0..n {
                for y in 0..n {
                    pairs.push((m.meet(x, y), table(x, y)));
                }
            }
            let gamma = m.congruence_generated(&pairs);
            (0..n).all(|x| (0..n).all(|y| m.leq(min_of(&gamma, m.meet(x, y)), table(x, y))))
        };
        if n <= 3 {
            // all binary operations
            let total = n.pow((n * n) as u32);
            for code in 0..total {
                let mut c = code;
                let mut table = vec![0usize; n * n];
                for entry in table.iter_mut() {
                    *entry = c % n;
                    c /= n;
                }
                if !check_table(&|x, y| table[x * n + y]) {
                    res = Outcome::failed("an operation undercuts its induced commutator".to_string());
                    break;
                }
            }
        } else if n == 4 {
            // symmetric meet-bounded candidate tables
            for table in crate::enumerate::symmetric_bounded_tables(m) {
                if !check_table(&|x, y| table[x * n + y]) {
                    res = Outcome::failed("an operation undercuts its induced commutator".to_string());
                    break;
                }
            }
        }
        res
    });
    out.into_vec()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c3_meet() -> CommutatorLattice {
        CommutatorLattice::with_meet_commutator(FiniteLattice::chain(3)).unwrap()
    }

    /// All-but-trivial commutator on the 3-chain: only [1,1] = a.
    fn c3_top_square() -> CommutatorLattice {
        CommutatorLattice::from_triples(FiniteLattice::chain(3), &[(2, 2, 1)]).unwrap()
    }

    /// The meet except [a,a] = 0.
    fn c3_nilpotent_a() -> CommutatorLattice {
        CommutatorLattice::from_triples(FiniteLattice::chain(3), &[(1, 2, 1), (2, 2, 2)]).unwrap()
    }

    #[test]
    fn validation_examples() {
        assert!(CommutatorLattice::with_meet_commutator(FiniteLattice::divisors(12)).is_ok());
        c3_top_square();
        let err = CommutatorLattice::from_triples(
            FiniteLattice::chain(3),
            &[(1, 1, 2), (1, 2, 1), (2, 2, 2)],
        )
        .unwrap_err();
        assert_eq!(err, CommutatorError::ExceedsMeet { x: 1, y: 1 });
        // meet on a non-distributive base is not join-distributive
        let err = CommutatorLattice::with_meet_commutator(FiniteLattice::diamond()).unwrap_err();
        assert!(matches!(err, CommutatorError::NotJoinDistributive { .. }));
    }

    #[test]
    fn spectrum_of_chain_variants() {
        let s = c3_meet().spectrum();
        assert_eq!(s.spec, ElemSet::from_iter([0, 1]));
        assert_eq!(s.radical, vec![0, 1, 2]);
        assert_eq!(s.radicals, ElemSet::from_iter([0, 1, 2]));

        let s = c3_top_square().spectrum();
        assert_eq!(s.spec, ElemSet::EMPTY);
        assert_eq!(s.radical, vec![2, 2, 2]);
        assert_eq!(s.radicals, ElemSet::single(2));

        let s = c3_nilpotent_a().spectrum();
        assert_eq!(s.spec, ElemSet::single(1));
        assert_eq!(s.radical, vec![1, 1, 2]);
        assert_eq!(s.radicals, ElemSet::from_iter([1, 2]));
    }

    #[test]
    fn radical_congruence_and_quotient() {
        let equiv = c3_meet().radical_congruence();
        assert!(equiv.cong.is_delta());

        let equiv = c3_nilpotent_a().radical_congruence();
        assert_eq!(
            equiv.cong.blocks(),
            &[ElemSet::from_iter([0, 1]), ElemSet::single(2)]
        );
        let (q, _) = c3_nilpotent_a().quotient_mod_equiv();
        assert!(q.base().is_isomorphic(&FiniteLattice::chain(2)));
        assert!(q.is_meet());

        let (q, _) = c3_top_square().quotient_mod_equiv();
        assert_eq!(q.base().n(), 1);
    }

    #[test]
    fn reticulation_collapses() {
        assert!(c3_meet().reticulation().is_isomorphic(&FiniteLattice::chain(3)));
        assert!(c3_nilpotent_a().reticulation().is_isomorphic(&FiniteLattice::chain(2)));
        assert_eq!(c3_top_square().reticulation().n(), 1);
    }

    #[test]
    fn residuation_examples() {
        let b2 = CommutatorLattice::with_meet_commutator(FiniteLattice::boolean(2)).unwrap();
        let base = b2.base().clone();
        let atoms: Vec<usize> = base
            .elements()
            .filter(|&x| x != base.bottom() && x != base.top())
            .collect();
        assert_eq!(b2.negation(atoms[0]), atoms[1]);
        for x in base.elements() {
            assert_eq!(b2.residuation(x, base.top()), base.top());
        }
        assert_eq!(c3_top_square().negation(2), 1);
    }

    #[test]
    fn power_stabilization() {
        let cl = c3_nilpotent_a();
        assert_eq!(cl.stable_power(1), 0);
        assert_eq!(cl.power_reaches(1, 0), Some(2));
        assert_eq!(cl.power_reaches(1, 2), None);
    }

    #[test]
    fn chain_variant_batteries_are_clean() {
        for cl in [c3_meet(), c3_top_square(), c3_nilpotent_a()] {
            for check in cl.full_report() {
                assert!(!check.outcome.is_failure(), "{check:?} on {cl:?}");
            }
        }
    }

    #[test]
    fn hypothesis_gating_is_visible() {
        // [x,1]=x fails at x=1 for the top-square variant, so unital-gated
        // checks report the unmet hypothesis rather than a verdict
        let report = c3_top_square().ourdavey_report();
        assert!(!report.unital);
        assert!(report
            .checks
            .iter()
            .filter(|c| c.name == "ourdavey.grid")
            .all(|c| c.outcome == Outcome::HypothesisNotMet));
        // rho(0) = a != 0 in the nilpotent variant gates the rho0 checks
        let cl = c3_nilpotent_a();
        let s = cl.spectrum();
        assert_ne!(s.radical[0], 0);
        let checks = cl.boolean_center_theory();
        assert!(checks
            .iter()
            .filter(|c| c.name == "charstone.principal_negation")
            .all(|c| c.outcome == Outcome::HypothesisNotMet));
    }

    #[test]
    fn meet_commutator_satisfies_ourdavey_hypotheses() {
        let cl = CommutatorLattice::with_meet_commutator(FiniteLattice::divisors(12)).unwrap();
        let report = cl.ourdavey_report();
        assert!(report.rho0 && report.one_class_trivial && report.unital);
        let grid = report
            .checks
            .iter()
            .find(|c| c.name == "ourdavey.grid")
            .unwrap();
        assert_eq!(grid.outcome, Outcome::Holds);
    }

    #[test]
    fn commutator_from_congruence_chain() {
        let m = FiniteLattice::chain(3);
        let theta = LatticeCongruence::from_blocks(
            &m,
            &[ElemSet::from_iter([0, 1]), ElemSet::single(2)],
        )
        .unwrap();
        let (cl, checks) = commutator_from_congruence_checks(&m, &theta);
        let cl = cl.unwrap();
        assert_eq!(cl.comm(2, 2), 2);
        assert_eq!(cl.comm(1, 2), 0);
        assert_eq!(cl.comm(1, 1), 0);
        assert!(checks.iter().all(|c| !c.outcome.is_failure()));
        assert_eq!(cl.spectrum().spec, ElemSet::single(1));

        // identity congruence induces the meet
        let (cl, _) = commutator_from_congruence_checks(&m, &LatticeCongruence::delta(3));
        assert!(cl.unwrap().is_meet());

        let b2 = FiniteLattice::boolean(2);
        let (cl, checks) = commutator_from_congruence_checks(&b2, &LatticeCongruence::delta(4));
        let cl = cl.unwrap();
        assert!(cl.is_meet());
        assert_eq!(cl.spectrum().spec.len(), 2);
        assert!(checks.iter().all(|c| !c.outcome.is_failure()));
    }

    #[test]
    fn refusal_on_non_distributive_quotient() {
        let m3 = FiniteLattice::diamond();
        let err = commutator_from_congruence(&m3, &LatticeCongruence::delta(5)).unwrap_err();
        assert_eq!(err, CommutatorError::QuotientNotDistributive);
    }

    #[test]
    fn commsofcgs_on_small_lattices() {
        for m in [FiniteLattice::chain(3), FiniteLattice::boolean(2)] {
            for check in commsofcgs_checks(&m) {
                assert!(!check.outcome.is_failure(), "{check:?}");
            }
        }
    }
}
