//! Annihilators, the Boolean center, and the annihilator conditions
//! (1)-(5)/(iv) on a bounded lattice, together with the equivalence report
//! for distributive lattices.
//!
//! On a finite carrier the cardinality parameter collapses to three values:
//! `One` quantifies over singletons, `Finite` and `All` both quantify over
//! all subsets. The checker evaluates `Finite` by direct enumeration of all
//! subsets when the carrier is small and `All` through the closure family of
//! distinct annihilators, and asserts the coincidence instead of assuming it.

use crate::lattice::FiniteLattice;
use crate::set::ElemSet;
use serde::Serialize;

/// Carriers at most this large get the brute-force all-subsets route for
/// `Kappa::Finite`.
pub const BRUTE_KAPPA_MAX: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Family {
    C1,
    C2,
    C3,
    C4,
    C5,
    Iv,
}

impl Family {
    pub const DAVEY: [Family; 5] = [Family::C1, Family::C2, Family::C3, Family::C4, Family::C5];
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Kappa {
    One,
    Finite,
    All,
}

impl Kappa {
    pub const ALL: [Kappa; 3] = [Kappa::One, Kappa::Finite, Kappa::All];
}

/// A condition index: one of the five Davey families at a cardinality, or
/// the cardinality-free condition (iv).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct ConditionId {
    pub family: Family,
    pub kappa: Option<Kappa>,
}

impl ConditionId {
    pub fn new(family: Family, kappa: Kappa) -> ConditionId {
        assert!(family != Family::Iv, "condition (iv) carries no cardinality");
        ConditionId { family, kappa: Some(kappa) }
    }

    pub fn iv() -> ConditionId {
        ConditionId { family: Family::Iv, kappa: None }
    }

    /// The full 16-entry grid: five families at three cardinalities plus (iv).
    pub fn grid() -> Vec<ConditionId> {
        let mut out = Vec::with_capacity(16);
        for family in Family::DAVEY {
            for kappa in Kappa::ALL {
                out.push(ConditionId::new(family, kappa));
            }
        }
        out.push(ConditionId::iv());
        out
    }

    pub fn describe(&self) -> String {
        match self.kappa {
            Some(k) => format!("{:?}@{:?}", self.family, k),
            None => "Iv".to_string(),
        }
    }
}

/// An annihilator with the subset it annihilates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AnnSet {
    pub members: ElemSet,
    pub source: ElemSet,
}

/// `Ann(U) = {x : x ^ u = 0 for all u in U}`; the empty source annihilates
/// nothing, so its annihilator is the whole carrier.
pub fn annihilator(lat: &FiniteLattice, u: ElemSet) -> AnnSet {
    let members = u.iter().fold(lat.carrier(), |acc, a| acc & single_annihilator(lat, a));
    AnnSet { members, source: u }
}

pub fn double_annihilator(lat: &FiniteLattice, u: ElemSet) -> AnnSet {
    let first = annihilator(lat, u);
    AnnSet { members: annihilator(lat, first.members).members, source: u }
}

fn single_annihilator(lat: &FiniteLattice, a: usize) -> ElemSet {
    ElemSet::from_iter(lat.elements().filter(|&x| lat.meet(x, a) == lat.bottom()))
}

/// The family of all distinct annihilators `{Ann(U) : U ⊆ L}`, computed as
/// the closure of the single-element annihilators (plus the full carrier)
/// under pairwise intersection, with a source witness for each member.
#[derive(Debug, Clone)]
pub struct AnnihilatorFamily {
    /// All distinct annihilators, sorted for determinism.
    pub all: Vec<AnnSet>,
    /// For each element `a`, the member index of `Ann(a)`.
    pub pann_of: Vec<usize>,
    /// For each element `a`, the member index of `Ann(Ann(a))`.
    pub p2ann_of: Vec<usize>,
}

impl AnnihilatorFamily {
    pub fn position(&self, members: ElemSet) -> Option<usize> {
        self.all.iter().position(|a| a.members == members)
    }

    /// Distinct members of the `PAnn` sub-family.
    pub fn pann_sets(&self) -> Vec<ElemSet> {
        let mut out: Vec<ElemSet> = self.pann_of.iter().map(|&i| self.all[i].members).collect();
        out.sort();
        out.dedup();
        out
    }

    /// Distinct members of the `P2Ann` sub-family.
    pub fn p2ann_sets(&self) -> Vec<ElemSet> {
        let mut out: Vec<ElemSet> = self.p2ann_of.iter().map(|&i| self.all[i].members).collect();
        out.sort();
        out.dedup();
        out
    }
}

pub fn all_annihilators(lat: &FiniteLattice) -> AnnihilatorFamily {
    let mut all: Vec<AnnSet> = vec![AnnSet { members: lat.carrier(), source: ElemSet::EMPTY }];
    let push = |all: &mut Vec<AnnSet>, cand: AnnSet| -> bool {
        if all.iter().any(|a| a.members == cand.members) {
            false
        } else {
            all.push(cand);
            true
        }
    };
    for a in lat.elements() {
        let cand = AnnSet { members: single_annihilator(lat, a), source: ElemSet::single(a) };
        push(&mut all, cand);
    }
    // Ann(U1 ∪ U2) = Ann(U1) ∩ Ann(U2): closing under intersection reaches
    // every Ann(U)
    loop {
        let mut added = false;
        let snapshot = all.clone();
        for i in 0..snapshot.len() {
            for j in i + 1..snapshot.len() {
                let cand = AnnSet {
                    members: snapshot[i].members & snapshot[j].members,
                    source: snapshot[i].source | snapshot[j].source,
                };
                added |= push(&mut all, cand);
            }
        }
        if !added {
            break;
        }
    }
    all.sort_by_key(|a| (a.members.len(), a.members));
    let pann_of: Vec<usize> = lat
        .elements()
        .map(|a| {
            let m = single_annihilator(lat, a);
            all.iter().position(|x| x.members == m).unwrap()
        })
        .collect();
    let p2ann_of: Vec<usize> = lat
        .elements()
        .map(|a| {
            let m = annihilator(lat, all[pann_of[a]].members).members;
            all.iter().position(|x| x.members == m).unwrap()
        })
        .collect();
    AnnihilatorFamily { all, pann_of, p2ann_of }
}

/// The Boolean center: complemented elements, one complement witness each,
/// and whether the center is a sublattice of `L` that is Boolean.
#[derive(Debug, Clone)]
pub struct BooleanCenter {
    pub members: ElemSet,
    pub complement: Vec<Option<usize>>,
    pub is_sublattice: bool,
    pub is_boolean: bool,
}

pub fn boolean_center(lat: &FiniteLattice) -> BooleanCenter {
    let mut members = ElemSet::EMPTY;
    let mut complement = vec![None; lat.n()];
    for e in lat.elements() {
        for f in lat.elements() {
            if lat.meet(e, f) == lat.bottom() && lat.join(e, f) == lat.top() {
                members.insert(e);
                complement[e] = Some(f);
                break;
            }
        }
    }
    let is_sublattice = lat.is_closed_sublattice(members);
    let is_boolean = is_sublattice && {
        let (sub, _) = lat.sublattice(members);
        sub.is_distributive() && is_complemented(&sub)
    };
    BooleanCenter { members, complement, is_sublattice, is_boolean }
}

/// Every element has a complement with respect to the bounds.
pub fn is_complemented(lat: &FiniteLattice) -> bool {
    lat.elements().all(|x| {
        lat.elements()
            .any(|y| lat.meet(x, y) == lat.bottom() && lat.join(x, y) == lat.top())
    })
}

impl BooleanCenter {
    /// The complement of a central element inside the center; unique when
    /// the center is Boolean.
    pub fn complement_in_center(&self, lat: &FiniteLattice, e: usize) -> Option<usize> {
        self.members
            .iter()
            .find(|&f| lat.meet(e, f) == lat.bottom() && lat.join(e, f) == lat.top())
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Verdict {
    pub holds: bool,
    pub witness: Option<String>,
}

impl Verdict {
    pub fn pass() -> Verdict {
        Verdict { holds: true, witness: None }
    }

    pub fn fail(witness: impl Into<String>) -> Verdict {
        Verdict { holds: false, witness: Some(witness.into()) }
    }
}

/// Precomputed data for condition checking on one lattice.
pub struct ConditionContext<'a> {
    pub lat: &'a FiniteLattice,
    pub family: AnnihilatorFamily,
    pub center: BooleanCenter,
}

impl<'a> ConditionContext<'a> {
    pub fn new(lat: &'a FiniteLattice) -> ConditionContext<'a> {
        ConditionContext {
            lat,
            family: all_annihilators(lat),
            center: boolean_center(lat),
        }
    }

    fn label_set(&self, s: ElemSet) -> String {
        let names: Vec<&str> = s.iter().map(|x| self.lat.label(x)).collect();
        format!("{{{}}}", names.join(","))
    }

    /// The annihilators in scope for a cardinality, with source witnesses.
    fn scope(&self, kappa: Kappa) -> Vec<AnnSet> {
        match kappa {
            Kappa::One => {
                let mut out = vec![annihilator(self.lat, ElemSet::EMPTY)];
                for a in self.lat.elements() {
                    out.push(annihilator(self.lat, ElemSet::single(a)));
                }
                out
            }
            Kappa::Finite if self.lat.n() <= BRUTE_KAPPA_MAX => self
                .lat
                .carrier()
                .subsets()
                .map(|u| annihilator(self.lat, u))
                .collect(),
            Kappa::Finite | Kappa::All => self.family.all.clone(),
        }
    }

    /// Is the set the principal ideal of a central element?
    fn central_principal(&self, s: ElemSet) -> Option<usize> {
        self.center.members.iter().find(|&e| self.lat.down_set(e) == s)
    }

    pub fn is_stone(&self) -> bool {
        self.check(ConditionId::new(Family::C1, Kappa::One)).holds
    }

    pub fn is_strongly_stone(&self) -> bool {
        self.check(ConditionId::new(Family::C1, Kappa::All)).holds
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

    /// (1): every in-scope annihilator is the principal ideal of a central
    /// element.
    fn check_c1(&self, kappa: Kappa) -> Verdict {
        for ann in self.scope(kappa) {
            if self.central_principal(ann.members).is_none() {
                return Verdict::fail(format!(
                    "Ann{} = {} is no principal ideal of a central element",
                    self.label_set(ann.source),
                    self.label_set(ann.members)
                ));
            }
        }
        Verdict::pass()
    }

    /// (2): Stone, and the Boolean center is a Boolean sublattice. On a
    /// finite carrier kappa-completeness of the center is automatic and is
    /// recorded rather than tested.
    fn check_c2(&self) -> Verdict {
        let stone = self.check_c1(Kappa::One);
        if !stone.holds {
            return Verdict::fail(format!("not Stone: {}", stone.witness.unwrap()));
        }
        if !self.center.is_sublattice {
            return Verdict::fail("Boolean center is not a sublattice");
        }
        if !self.center.is_boolean {
            return Verdict::fail(format!(
                "Boolean center {} is a sublattice but not Boolean",
                self.label_set(self.center.members)
            ));
        }
        Verdict::pass()
    }

    /// (3): P2Ann is a Boolean sublattice of Id(L) (bounds {0} and L) and
    /// a -> Ann(Ann(a)) preserves meet and join.
    fn check_c3(&self) -> Verdict {
        let lat = self.lat;
        for a in lat.elements() {
            let p2 = self.family.all[self.family.p2ann_of[a]].members;
            if !lat.is_ideal(p2) {
                return Verdict::fail(format!(
                    "Ann(Ann({})) = {} is not an ideal",
                    lat.label(a),
                    self.label_set(p2)
                ));
            }
        }
        // every member is a principal ideal now; work with their maxima
        let p2sets = self.family.p2ann_sets();
        let maxima = ElemSet::from_iter(p2sets.iter().map(|&s| lat.join_set(s)));
        if !maxima.contains(lat.bottom()) || !maxima.contains(lat.top()) {
            return Verdict::fail("P2Ann misses a bound of Id(L)");
        }
        if !lat.is_closed_sublattice(maxima) {
            return Verdict::fail(format!(
                "P2Ann maxima {} are not closed under meet/join",
                self.label_set(maxima)
            ));
        }
        let (sub, _) = lat.sublattice(maxima);
        if !sub.is_distributive() {
            return Verdict::fail("P2Ann is a sublattice of Id(L) but not distributive");
        }
        if !is_complemented(&sub) {
            return Verdict::fail("P2Ann is not complemented within its bounds");
        }
        for a in lat.elements() {
            for b in lat.elements() {
                let pa = self.family.all[self.family.p2ann_of[a]].members;
                let pb = self.family.all[self.family.p2ann_of[b]].members;
                let p_meet = self.family.all[self.family.p2ann_of[lat.meet(a, b)]].members;
                let p_join = self.family.all[self.family.p2ann_of[lat.join(a, b)]].members;
                let ideal_join = lat.down_set(lat.join(lat.join_set(pa), lat.join_set(pb)));
                if p_meet != (pa & pb) || p_join != ideal_join {
                    return Verdict::fail(format!(
                        "a -> Ann(Ann(a)) is not a lattice morphism at ({},{})",
                        lat.label(a),
                        lat.label(b)
                    ));
                }
            }
        }
        Verdict::pass()
    }

    /// The shared first half of (4): Ann(a^b) is the ideal generated by
    /// Ann(a) ∪ Ann(b).
    fn check_iv(&self) -> Verdict {
        let lat = self.lat;
        for a in lat.elements() {
            for b in lat.elements() {
                let ann_a = self.family.all[self.family.pann_of[a]].members;
                let ann_b = self.family.all[self.family.pann_of[b]].members;
                let ann_meet = self.family.all[self.family.pann_of[lat.meet(a, b)]].members;
                let generated = lat.ideal_closure(ann_a | ann_b);
                if ann_meet != generated {
                    return Verdict::fail(format!(
                        "Ann({}^{}) differs from the ideal generated by Ann({}) ∪ Ann({})",
                        lat.label(a),
                        lat.label(b),
                        lat.label(a),
                        lat.label(b)
                    ));
                }
            }
        }
        Verdict::pass()
    }

    /// (4): (iv) plus: every in-scope double annihilator is a single-element
    /// annihilator.
    fn check_c4(&self, kappa: Kappa) -> Verdict {
        let iv = self.check_iv();
        if !iv.holds {
            return iv;
        }
        for ann in self.scope(kappa) {
            let double = annihilator(self.lat, ann.members).members;
            let principal = self
                .lat
                .elements()
                .any(|x| self.family.all[self.family.pann_of[x]].members == double);
            if !principal {
                return Verdict::fail(format!(
                    "Ann(Ann{}) equals no single-element annihilator",
                    self.label_set(ann.source)
                ));
            }
        }
        Verdict::pass()
    }

    /// (5): the ideal generated by Ann(U) ∪ Ann(Ann(U)) is the whole
    /// lattice, i.e. the join of the union is the top.
    fn check_c5(&self, kappa: Kappa) -> Verdict {
        for ann in self.scope(kappa) {
            if !self.c5_instance(ann.members) {
                return Verdict::fail(format!(
                    "Ann{} ∪ Ann(Ann{}) generates a proper ideal",
                    self.label_set(ann.source),
                    self.label_set(ann.source)
                ));
            }
        }
        Verdict::pass()
    }

    fn c5_instance(&self, ann_u: ElemSet) -> bool {
        let double = annihilator(self.lat, ann_u).members;
        self.lat.join_set(ann_u | double) == self.lat.top()
    }

    /// Evaluates the full condition grid and the equivalence verdicts.
    pub fn davey_report(&self) -> DaveyReport {
        let distributive = self.lat.is_distributive();
        let verdicts: Vec<(ConditionId, Verdict)> = ConditionId::grid()
            .into_iter()
            .map(|c| (c, self.check(c)))
            .collect();
        let value = |family: Family, kappa: Kappa| {
            verdicts
                .iter()
                .find(|(c, _)| c.family == family && c.kappa == Some(kappa))
                .map(|(_, v)| v.holds)
                .unwrap()
        };
        let families_agree = Kappa::ALL.iter().all(|&k| {
            let first = value(Family::C1, k);
            Family::DAVEY.iter().all(|&f| value(f, k) == first)
        });
        let kappa_collapse = Family::DAVEY.iter().all(|&f| {
            let one = value(f, Kappa::One);
            value(f, Kappa::Finite) == one && value(f, Kappa::All) == one
        });
        let finite_matches_all = Family::DAVEY
            .iter()
            .all(|&f| value(f, Kappa::Finite) == value(f, Kappa::All));
        let all_equal = {
            let first = verdicts[0].1.holds;
            verdicts.iter().all(|(_, v)| v.holds == first)
        };
        DaveyReport {
            distributive,
            hypothesis_violated: !distributive,
            verdicts,
            families_agree,
            kappa_collapse,
            finite_matches_all,
            equivalent: all_equal,
        }
    }
}

/// Condition matrix plus the equivalence verdicts for one lattice.
#[derive(Debug, Clone)]
pub struct DaveyReport {
    pub distributive: bool,
    /// The equivalence theorem assumes distributivity; the report is still
    /// produced for other lattices but flagged.
    pub hypothesis_violated: bool,
    pub verdicts: Vec<(ConditionId, Verdict)>,
    /// At each cardinality the five families agree.
    pub families_agree: bool,
    /// Within each family the three cardinalities agree.
    pub kappa_collapse: bool,
    /// The two evaluation routes for subsets (direct enumeration vs the
    /// closure family) coincide.
    pub finite_matches_all: bool,
    /// Every entry of the grid, (iv) included, has the same value.
    pub equivalent: bool,
}

impl DaveyReport {
    pub fn verdict(&self, cond: ConditionId) -> bool {
        self.verdicts
            .iter()
            .find(|(c, _)| *c == cond)
            .map(|(_, v)| v.holds)
            .unwrap()
    }
}

pub fn check_condition(lat: &FiniteLattice, cond: ConditionId) -> Verdict {
    ConditionContext::new(lat).check(cond)
}

pub fn davey_report(lat: &FiniteLattice) -> DaveyReport {
    ConditionContext::new(lat).davey_report()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn set(items: impl IntoIterator<Item = usize>) -> ElemSet {
        ElemSet::from_iter(items)
    }

    #[test]
    fn annihilators_by_brute_force() {
        let c3 = FiniteLattice::chain(3);
        assert_eq!(annihilator(&c3, set([1])).members, set([0]));
        assert_eq!(annihilator(&c3, set([0])).members, c3.carrier());
        let m3 = FiniteLattice::diamond();
        assert_eq!(annihilator(&m3, set([1])).members, set([0, 2, 3]));
    }

    #[test]
    fn family_closure_matches_all_subsets() {
        for lat in [
            FiniteLattice::chain(1),
            FiniteLattice::chain(3),
            FiniteLattice::boolean(2),
            FiniteLattice::diamond(),
            FiniteLattice::pentagon(),
            FiniteLattice::divisors(12),
        ] {
            let family = all_annihilators(&lat);
            let mut brute: Vec<ElemSet> = lat
                .carrier()
                .subsets()
                .map(|u| annihilator(&lat, u).members)
                .collect();
            brute.sort();
            brute.dedup();
            let mut closed: Vec<ElemSet> = family.all.iter().map(|a| a.members).collect();
            closed.sort();
            assert_eq!(closed, brute);
            // each member's recorded source really produces it
            for a in &family.all {
                assert_eq!(annihilator(&lat, a.source).members, a.members);
            }
        }
    }

    #[test]
    fn family_examples() {
        let c3 = FiniteLattice::chain(3);
        let fam = all_annihilators(&c3);
        let sets: Vec<ElemSet> = fam.all.iter().map(|a| a.members).collect();
        assert_eq!(sets, vec![set([0]), c3.carrier()]);

        let b2 = FiniteLattice::boolean(2);
        let fam = all_annihilators(&b2);
        assert_eq!(fam.all.len(), 4);

        let point = FiniteLattice::chain(1);
        assert_eq!(all_annihilators(&point).all.len(), 1);
    }

    #[test]
    fn centers() {
        let c3 = FiniteLattice::chain(3);
        let center = boolean_center(&c3);
        assert_eq!(center.members, set([0, 2]));
        assert!(center.is_boolean);

        let m3 = FiniteLattice::diamond();
        let center = boolean_center(&m3);
        assert_eq!(center.members, m3.carrier());
        // the whole diamond is closed, hence a sublattice, but not Boolean
        assert!(center.is_sublattice);
        assert!(!center.is_boolean);

        let b2 = FiniteLattice::boolean(2);
        let center = boolean_center(&b2);
        assert_eq!(center.members, b2.carrier());
        assert!(center.is_boolean);
    }

    #[test]
    fn condition_one_examples() {
        let c3 = FiniteLattice::chain(3);
        let ctx = ConditionContext::new(&c3);
        assert!(ctx.check(ConditionId::new(Family::C1, Kappa::One)).holds);

        let m3 = FiniteLattice::diamond();
        let ctx = ConditionContext::new(&m3);
        let verdict = ctx.check(ConditionId::new(Family::C1, Kappa::One));
        assert!(!verdict.holds);
        assert!(verdict.witness.unwrap().contains("{a}"));
    }

    #[test]
    fn empty_source_instances_pass() {
        for lat in [FiniteLattice::diamond(), FiniteLattice::pentagon(), FiniteLattice::chain(4)] {
            let ctx = ConditionContext::new(&lat);
            // Ann(∅) = L = (1] with 1 central, and the (5)-instance for ∅ joins to 1
            assert!(ctx.central_principal(lat.carrier()).is_some());
            assert!(ctx.c5_instance(lat.carrier()));
        }
    }

    #[test]
    fn davey_reports() {
        for lat in [FiniteLattice::boolean(2), FiniteLattice::chain(3), FiniteLattice::divisors(12)] {
            let report = davey_report(&lat);
            assert!(report.distributive);
            assert!(report.families_agree && report.kappa_collapse && report.finite_matches_all);
            assert!(report.equivalent);
            assert!(report.verdicts.iter().all(|(_, v)| v.holds));
        }
    }

    #[test]
    fn pentagon_separates_one_from_two() {
        // N5 is strongly Stone, but its center is the whole non-distributive
        // lattice, so (2) fails while (1) holds at every cardinality
        let n5 = FiniteLattice::pentagon();
        let ctx = ConditionContext::new(&n5);
        for kappa in Kappa::ALL {
            assert!(ctx.check(ConditionId::new(Family::C1, kappa)).holds);
            assert!(!ctx.check(ConditionId::new(Family::C2, kappa)).holds);
        }
    }

    #[test]
    fn diamond_satisfies_five_but_not_one() {
        let m3 = FiniteLattice::diamond();
        let ctx = ConditionContext::new(&m3);
        for kappa in Kappa::ALL {
            assert!(ctx.check(ConditionId::new(Family::C5, kappa)).holds);
            assert!(!ctx.check(ConditionId::new(Family::C1, kappa)).holds);
        }
    }

    #[test]
    fn annihilator_identities() {
        for lat in [FiniteLattice::diamond(), FiniteLattice::pentagon(), FiniteLattice::divisors(12)] {
            for u in lat.carrier().subsets() {
                let ann = annihilator(&lat, u).members;
                let triple = annihilator(&lat, annihilator(&lat, ann).members).members;
                assert!(ann.is_subset(triple));
                assert_eq!(ann, triple);
            }
            for u in lat.carrier().subsets().take(40) {
                for v in lat.carrier().subsets().take(40) {
                    let both = annihilator(&lat, u | v).members;
                    assert_eq!(both, annihilator(&lat, u).members & annihilator(&lat, v).members);
                    if u.is_subset(v) {
                        assert!(annihilator(&lat, v).members.is_subset(annihilator(&lat, u).members));
                    }
                }
            }
        }
    }

    #[test]
    fn distributive_annihilators_are_principal_ideals() {
        for lat in [FiniteLattice::chain(4), FiniteLattice::boolean(3), FiniteLattice::divisors(60)] {
            assert!(lat.is_distributive());
            for u in lat.carrier().subsets() {
                let ann = annihilator(&lat, u).members;
                assert!(lat.is_ideal(ann));
                assert_eq!(ann, annihilator(&lat, ElemSet::single(lat.join_set(u))).members);
            }
        }
    }

    proptest! {
        #[test]
        fn antitone_and_triple_identity(u_bits in 0u16..32, v_bits in 0u16..32, which in 0usize..3) {
            let lat = match which {
                0 => FiniteLattice::diamond(),
                1 => FiniteLattice::pentagon(),
                _ => FiniteLattice::boolean(2),
            };
            let mask = lat.carrier();
            let u = ElemSet(u_bits as u128) & mask;
            let v = ElemSet(v_bits as u128) & mask;
            let ann_uv = annihilator(&lat, u | v).members;
            let ann_u = annihilator(&lat, u).members;
            prop_assert!(ann_uv.is_subset(ann_u));
            prop_assert_eq!(annihilator(&lat, annihilator(&lat, ann_u).members).members, ann_u);
            prop_assert!(lat.is_down_closed(ann_u));
            prop_assert!(ann_u.contains(lat.bottom()));
        }
    }
}
