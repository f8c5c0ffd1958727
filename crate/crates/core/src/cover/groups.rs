use rayon::prelude::*;
use rustc_hash::FxHashMap;
use serde::Serialize;

use super::instance::{Budget, CoverInstance, CoverSet, CoverSolution};
use super::solve::solve_exact;
use crate::combinat::{factorial, Partition};
use crate::error::{Error, Result};
use crate::families::{Catalog, FamilySpec};
use crate::permgroup::{
    catalog_maximal_subgroups, for_each_in_class, ConcreteGroup, FamilyMember, Perm, SubgroupLattice,
};

/// Where maximal subgroups come from.
#[derive(Clone, Copy, Debug)]
pub enum Mode<'a> {
    /// Full subgroup lattice of the group.
    Lattice,
    /// Families plus primitive catalogue; the group must be `S_n`.
    Catalog(&'a Catalog),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Universe {
    /// Non-identity elements of prime-power order.
    Primary,
    /// Every non-identity element.
    All,
}

/// Bound on the universe size for group-level instances.
pub const UNIVERSE_CAP: usize = 2_000_000;

/// A covering number: an explicit optimal (or bracketed) cover, or infinity.
#[derive(Clone, Debug)]
pub enum CoverNumber {
    Infinite { reason: String },
    Finite(GroupCover),
}

#[derive(Clone, Debug)]
pub struct GroupCover {
    pub instance: CoverInstance,
    pub solution: CoverSolution,
    /// Families whose maximality is taken from the literature.
    pub assumed_inputs: Vec<String>,
}

impl GroupCover {
    pub fn labels(&self) -> Vec<&str> {
        self.solution.chosen.iter().map(|&s| self.instance.sets[s].label.as_str()).collect()
    }
}

impl CoverNumber {
    pub fn is_infinite(&self) -> bool {
        matches!(self, CoverNumber::Infinite { .. })
    }

    /// The certified value, if the search finished.
    pub fn value(&self) -> Option<usize> {
        match self {
            CoverNumber::Finite(c) if c.solution.status == super::Status::Optimal => Some(c.solution.size()),
            _ => None,
        }
    }

    pub fn cover(&self) -> Option<&GroupCover> {
        match self {
            CoverNumber::Finite(c) => Some(c),
            CoverNumber::Infinite { .. } => None,
        }
    }

    /// `∞`, the optimum, or `[lb, ub]`.
    pub fn display(&self) -> String {
        match self {
            CoverNumber::Infinite { .. } => "∞".into(),
            CoverNumber::Finite(c) => match self.value() {
                Some(v) => v.to_string(),
                None if c.solution.status == super::Status::Infeasible => "∞".into(),
                None => format!("[{}, {}]", c.solution.lower_bound, c.solution.size()),
            },
        }
    }
}

/// A candidate subgroup for an instance.
#[derive(Clone, Debug)]
pub enum Candidate {
    Group { label: String, group: ConcreteGroup },
    Member(FamilyMember),
}

impl Candidate {
    pub fn label(&self) -> String {
        match self {
            Candidate::Group { label, .. } => label.clone(),
            Candidate::Member(m) => m.label(),
        }
    }

    pub fn contains(&self, p: &Perm) -> bool {
        match self {
            Candidate::Group { group, .. } => group.contains(p),
            Candidate::Member(m) => m.contains(p),
        }
    }

    fn members_in(&self, universe: &[Perm], index: &FxHashMap<Perm, u32>) -> Vec<u32> {
        let explicit: Option<Vec<Perm>> = match self {
            Candidate::Group { group, .. } if group.order() < universe.len() => Some(group.elements().to_vec()),
            Candidate::Member(m) => m.explicit_elements().map(|it| it.collect()),
            _ => None,
        };
        let mut out: Vec<u32> = match explicit {
            Some(els) => els.iter().filter_map(|p| index.get(p).copied()).collect(),
            None => (0..universe.len() as u32).filter(|&i| self.contains(&universe[i as usize])).collect(),
        };
        out.sort_unstable();
        out
    }
}

/// Builds an instance over `universe` (identity excluded by the caller).
/// Sets that miss the universe are dropped.
pub fn candidate_instance(universe: Vec<Perm>, candidates: &[Candidate]) -> CoverInstance {
    let index: FxHashMap<Perm, u32> = universe.iter().enumerate().map(|(i, p)| (*p, i as u32)).collect();
    let sets: Vec<CoverSet> = candidates
        .par_iter()
        .map(|c| CoverSet { label: c.label(), members: c.members_in(&universe, &index) })
        .collect::<Vec<_>>()
        .into_iter()
        .filter(|s| !s.members.is_empty())
        .collect();
    CoverInstance::from_indices(universe.iter().map(|p| p.rank()).collect(), sets)
}

/// Checks that `h` is a maximal subgroup of `g`.
pub fn is_maximal_in(h: &ConcreteGroup, g: &ConcreteGroup) -> Result<bool> {
    if h.order() >= g.order() || !h.is_subgroup_of(g) {
        return Ok(false);
    }
    let mut seen = vec![false; g.order()];
    for (i, x) in g.elements().iter().enumerate() {
        if seen[i] || h.contains(x) {
            continue;
        }
        let mut gens = h.generators().to_vec();
        gens.push(*x);
        let k = ConcreteGroup::close_with_cap(g.degree(), &gens, g.order())?;
        if k.order() != g.order() {
            return Ok(false);
        }
        seen[i] = true;
    }
    Ok(true)
}

/// Instance from explicit subgroups of `g`. Non-maximal subgroups are
/// refused unless `allow_non_maximal` is set.
pub fn subgroup_instance(
    g: &ConcreteGroup,
    subgroups: Vec<(String, ConcreteGroup)>,
    universe: Universe,
    allow_non_maximal: bool,
) -> Result<CoverInstance> {
    if !allow_non_maximal {
        for (label, h) in &subgroups {
            if !is_maximal_in(h, g)? {
                return Err(Error::NotMaximal(label.clone()));
            }
        }
    }
    let cands: Vec<Candidate> = subgroups.into_iter().map(|(label, group)| Candidate::Group { label, group }).collect();
    Ok(candidate_instance(universe_of(g, universe), &cands))
}

fn universe_of(g: &ConcreteGroup, u: Universe) -> Vec<Perm> {
    g.elements().iter().filter(|p| !p.is_identity() && (u == Universe::All || p.is_primary())).copied().collect()
}

fn is_symmetric(g: &ConcreteGroup) -> bool {
    let n = g.degree() as u64;
    factorial(n) == g.order().into()
}

/// Maximal subgroups of `g` as candidates, with the assumed-maximality labels.
pub fn maximal_candidates(g: &ConcreteGroup, mode: Mode) -> Result<(Vec<Candidate>, Vec<String>)> {
    match mode {
        Mode::Lattice => {
            let lat = SubgroupLattice::with_cap(g, g.order().max(crate::permgroup::DEFAULT_LATTICE_CAP))?;
            let mut out = Vec::new();
            for c in lat.maximal_classes() {
                let order = lat.classes()[c].order;
                for (i, h) in lat.conjugates(c).into_iter().enumerate() {
                    out.push(Candidate::Group { label: format!("M{c}.{i}[{order}]"), group: h });
                }
            }
            Ok((out, vec![]))
        }
        Mode::Catalog(cat) => {
            if !is_symmetric(g) {
                return Err(Error::InvalidFamily("catalogue mode needs the full symmetric group".into()));
            }
            let members = catalog_maximal_subgroups(g.degree() as u32, cat)?;
            let mut assumed: Vec<String> = members.iter().filter(|m| m.assumed).map(|m| m.family.clone()).collect();
            assumed.dedup();
            Ok((members.into_iter().map(Candidate::Member).collect(), assumed))
        }
    }
}

fn cover_number(g: &ConcreteGroup, mode: Mode, universe: Universe, budget: Budget) -> Result<CoverNumber> {
    let u = universe_of(g, universe);
    if u.len() > UNIVERSE_CAP {
        return Err(Error::CapExceeded { what: format!("universe of {} elements", u.len()), cap: UNIVERSE_CAP as u64 });
    }
    let (cands, assumed_inputs) = maximal_candidates(g, mode)?;
    let instance = candidate_instance(u, &cands);
    let solution = solve_exact(&instance, budget, None);
    Ok(CoverNumber::Finite(GroupCover { instance, solution, assumed_inputs }))
}

/// σ₀(G): fewest proper subgroups whose union holds every element of
/// prime-power order. Infinite for cyclic p-groups.
pub fn sigma0_exact(g: &ConcreteGroup, mode: Mode, budget: Budget) -> Result<CoverNumber> {
    if g.is_cyclic_p_group() {
        return Ok(CoverNumber::Infinite { reason: "cyclic p-group".into() });
    }
    cover_number(g, mode, Universe::Primary, budget)
}

/// σ(G): fewest proper subgroups with union `G`. Infinite for cyclic groups.
pub fn sigma_exact(g: &ConcreteGroup, mode: Mode, budget: Budget) -> Result<CoverNumber> {
    if g.is_cyclic() {
        return Ok(CoverNumber::Infinite { reason: "cyclic group".into() });
    }
    cover_number(g, mode, Universe::All, budget)
}

/// γ₀(G): fewest conjugacy classes of proper subgroups whose conjugates
/// together hold every primary element. A class can always be traded for a
/// class of maximal subgroups containing it, so only maximal classes are
/// searched. Infinite for cyclic p-groups.
pub fn gamma0_exact(g: &ConcreteGroup) -> Result<CoverNumber> {
    if g.is_cyclic_p_group() {
        return Ok(CoverNumber::Infinite { reason: "cyclic p-group".into() });
    }
    let lat = SubgroupLattice::with_cap(g, g.order().max(crate::permgroup::DEFAULT_LATTICE_CAP))?;
    let universe = universe_of(g, Universe::Primary);
    let index: FxHashMap<Perm, u32> = universe.iter().enumerate().map(|(i, p)| (*p, i as u32)).collect();
    let sets = lat
        .maximal_classes()
        .into_iter()
        .map(|c| {
            let mut members: Vec<u32> = lat
                .conjugates(c)
                .iter()
                .flat_map(|h| h.elements().iter().filter_map(|p| index.get(p).copied()))
                .collect();
            members.sort_unstable();
            members.dedup();
            CoverSet { label: format!("class {c} [order {}]", lat.classes()[c].order), members }
        })
        .collect();
    let instance = CoverInstance::from_indices(universe.iter().map(|p| p.rank()).collect(), sets);
    let solution = solve_exact(&instance, Budget::unlimited(), None);
    Ok(CoverNumber::Finite(GroupCover { instance, solution, assumed_inputs: vec![] }))
}

#[derive(Clone, Debug, Serialize)]
pub struct SingleClassReport {
    pub classes_checked: usize,
    /// Orders of proper-subgroup classes whose conjugates hold every
    /// primary element.
    pub violations: Vec<usize>,
}

impl SingleClassReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks every class of proper subgroups: the union of its conjugates
/// never holds all primary elements.
pub fn no_single_class_covers(g: &ConcreteGroup) -> Result<SingleClassReport> {
    let lat = SubgroupLattice::with_cap(g, g.order().max(crate::permgroup::DEFAULT_LATTICE_CAP))?;
    let primary = universe_of(g, Universe::Primary);
    let mut violations = Vec::new();
    let mut checked = 0;
    for (c, class) in lat.classes().iter().enumerate() {
        if class.order == g.order() {
            continue;
        }
        checked += 1;
        let conj = lat.conjugates(c);
        if primary.iter().all(|p| conj.iter().any(|h| h.contains(p))) {
            violations.push(class.order);
        }
    }
    Ok(SingleClassReport { classes_checked: checked, violations })
}

/// Instance covering one conjugacy class of `S_n` by the catalogue's
/// maximal subgroups, minus the families in `exclude`.
pub fn class_cover_instance(
    n: u32,
    lambda: &Partition,
    catalog: &Catalog,
    exclude: &[FamilySpec],
) -> Result<(CoverInstance, Vec<String>)> {
    let lambda = lambda.padded_to(n)?;
    let mut universe = Vec::new();
    for_each_in_class(n as usize, &lambda, |p| universe.push(*p))?;
    if universe.len() > UNIVERSE_CAP {
        return Err(Error::CapExceeded {
            what: format!("class of {} elements", universe.len()),
            cap: UNIVERSE_CAP as u64,
        });
    }
    universe.sort_unstable();
    let excluded: Vec<String> = exclude.iter().map(|s| s.to_string()).collect();
    let members: Vec<FamilyMember> =
        catalog_maximal_subgroups(n, catalog)?.into_iter().filter(|m| !excluded.contains(&m.family)).collect();
    let mut assumed: Vec<String> = members.iter().filter(|m| m.assumed).map(|m| m.family.clone()).collect();
    assumed.dedup();
    let cands: Vec<Candidate> = members.into_iter().map(Candidate::Member).collect();
    Ok((candidate_instance(universe, &cands), assumed))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cover::Status;
    use crate::permgroup::Corpus;

    fn group(name: &str) -> ConcreteGroup {
        crate::permgroup::resolve_group(name, Corpus::builtin()).unwrap()
    }

    fn s0(name: &str) -> CoverNumber {
        sigma0_exact(&group(name), Mode::Lattice, Budget::unlimited()).unwrap()
    }

    #[test]
    fn small_symmetric() {
        assert_eq!(s0("S3").value(), Some(4));
        assert_eq!(s0("S4").value(), Some(4));
        let s5 = sigma0_exact(&group("S5"), Mode::Catalog(Catalog::builtin()), Budget::unlimited()).unwrap();
        assert_eq!(s5.value(), Some(6));
        let mut labels = s5.cover().unwrap().labels();
        labels.sort();
        assert_eq!(labels, vec!["A", "X1{1}", "X1{2}", "X1{3}", "X1{4}", "X1{5}"]);
    }

    #[test]
    fn cyclic_cases() {
        assert_eq!(s0("C6").value(), Some(2));
        assert!(sigma_exact(&group("C6"), Mode::Lattice, Budget::unlimited()).unwrap().is_infinite());
        assert!(s0("C4xC2").value().is_some());
        let s = sigma_exact(&group("S3"), Mode::Lattice, Budget::unlimited()).unwrap();
        assert_eq!(s.value(), Some(4));
        assert_eq!(s.cover().unwrap().solution.status, Status::Optimal);
    }

    #[test]
    fn gamma0_values() {
        for g in ["S4", "S5", "C6"] {
            assert_eq!(gamma0_exact(&group(g)).unwrap().value(), Some(2), "{g}");
        }
        for g in ["S4", "S5", "C6"] {
            assert!(no_single_class_covers(&group(g)).unwrap().holds(), "{g}");
        }
    }

    #[test]
    fn refuses_non_maximal() {
        let s4 = group("S4");
        let v4 = group("V4");
        let r = subgroup_instance(
            &s4,
            vec![("V4".into(), ConcreteGroup::close(4, v4.generators()).unwrap())],
            Universe::All,
            false,
        );
        assert!(matches!(r, Err(Error::NotMaximal(_))));
    }
}
