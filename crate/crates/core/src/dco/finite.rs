//! Finite DCOs given by explicit graphs, with exhaustive checkers.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use super::{conflict, leq, Dco};
use crate::report::Report;
use crate::verdict::{Error, Fuel, Result, Search, Status, Verdict};

/// A partial endofunction on `0..n`: `g[x] = Some(y)` means `x ↦ y`.
pub type Graph = Vec<Option<usize>>;

pub fn identity_graph(n: usize) -> Graph {
    (0..n).map(Some).collect()
}

pub fn constant_graph(n: usize, c: usize) -> Graph {
    vec![Some(c); n]
}

/// `then ∘ first`.
pub fn compose_graphs(first: &Graph, then: &Graph) -> Graph {
    first.iter().map(|y| y.and_then(|y| then[y])).collect()
}

/// `small ⊆ big`.
pub fn contains_graph(big: &Graph, small: &Graph) -> bool {
    small.iter().zip(big).all(|(s, b)| s.is_none() || s == b)
}

/// All `(n + 1)^n` partial functions on `0..n`, in odometer order.
pub fn all_partial_functions(n: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    let mut cur: Graph = vec![None; n];
    loop {
        out.push(cur.clone());
        let mut i = 0;
        loop {
            if i == n {
                return out;
            }
            cur[i] = match cur[i] {
                None => Some(0),
                Some(v) if v + 1 < n => Some(v + 1),
                Some(_) => None,
            };
            if cur[i].is_some() {
                break;
            }
            i += 1;
        }
    }
}

pub fn graph_show(atoms: &[String], g: &Graph) -> String {
    let parts: Vec<String> = g
        .iter()
        .enumerate()
        .filter_map(|(x, y)| y.map(|y| format!("{}->{}", atoms[x], atoms[y])))
        .collect();
    if parts.is_empty() {
        "(empty)".to_string()
    } else {
        parts.join(" ")
    }
}

/// Cartesian data: `⊤`, a total meet table, projections `λ`, `ρ` and
/// optional explicit pairing witnesses (searched for when absent).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cartesian {
    pub top: usize,
    pub meet: Vec<Vec<usize>>,
    pub lambda: usize,
    pub rho: usize,
    pub gamma: BTreeMap<(usize, usize), usize>,
}

/// Functional-completeness data: `@` and `α ↦ α̃` on member indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Completeness {
    pub universal: usize,
    pub tilde: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteDco {
    atoms: Vec<String>,
    names: Vec<String>,
    graphs: Vec<Graph>,
    identity: Option<usize>,
    cartesian: Option<Cartesian>,
    complete: Option<Completeness>,
}

impl FiniteDco {
    /// Validates graphs against the carrier. The identity is taken to be
    /// the first member whose graph is the identity, if any.
    pub fn new(atoms: Vec<String>, members: Vec<(String, Graph)>) -> Result<FiniteDco> {
        let n = atoms.len();
        for (i, a) in atoms.iter().enumerate() {
            if atoms[..i].contains(a) {
                return Err(Error::Invalid(format!("atom `{a}` listed twice")));
            }
        }
        let mut names = Vec::new();
        let mut graphs = Vec::new();
        for (name, g) in members {
            if names.contains(&name) {
                return Err(Error::Invalid(format!("member `{name}` defined twice")));
            }
            if g.len() != n {
                return Err(Error::Invalid(format!(
                    "member `{name}` has {} entries for {n} atoms",
                    g.len()
                )));
            }
            if let Some(bad) = g.iter().flatten().find(|&&y| y >= n) {
                return Err(Error::Invalid(format!(
                    "member `{name}` maps outside the carrier (index {bad})"
                )));
            }
            names.push(name);
            graphs.push(g);
        }
        let id = identity_graph(n);
        let identity = graphs.iter().position(|g| *g == id);
        Ok(FiniteDco {
            atoms,
            names,
            graphs,
            identity,
            cartesian: None,
            complete: None,
        })
    }

    /// Carrier `0..n` with atoms named by their index.
    pub fn numbered(n: usize, members: Vec<(&str, Graph)>) -> Result<FiniteDco> {
        FiniteDco::new(
            (0..n).map(|i| i.to_string()).collect(),
            members
                .into_iter()
                .map(|(s, g)| (s.to_string(), g))
                .collect(),
        )
    }

    /// Declares which member plays the identity (it is checked, not trusted).
    pub fn with_identity(mut self, name: &str) -> Result<FiniteDco> {
        let m = self
            .member_by_name(name)
            .ok_or_else(|| Error::Invalid(format!("unknown member `{name}`")))?;
        self.identity = Some(m);
        Ok(self)
    }

    pub fn with_cartesian(mut self, c: Cartesian) -> Result<FiniteDco> {
        let n = self.atoms.len();
        let m = self.graphs.len();
        let ok = c.top < n
            && c.meet.len() == n
            && c.meet
                .iter()
                .all(|row| row.len() == n && row.iter().all(|&v| v < n))
            && c.lambda < m
            && c.rho < m
            && c.gamma.iter().all(|(&(a, b), &g)| a < m && b < m && g < m);
        if !ok {
            return Err(Error::Invalid("malformed cartesian data".to_string()));
        }
        self.cartesian = Some(c);
        Ok(self)
    }

    pub fn with_completeness(mut self, c: Completeness) -> Result<FiniteDco> {
        let m = self.graphs.len();
        if c.universal >= m || c.tilde.len() != m || c.tilde.iter().any(|&t| t >= m) {
            return Err(Error::Invalid(
                "malformed functional-completeness data".to_string(),
            ));
        }
        self.complete = Some(c);
        Ok(self)
    }

    pub fn atoms(&self) -> &[String] {
        &self.atoms
    }

    pub fn size(&self) -> usize {
        self.atoms.len()
    }

    pub fn member_count(&self) -> usize {
        self.graphs.len()
    }

    pub fn name(&self, m: usize) -> &str {
        &self.names[m]
    }

    pub fn graph(&self, m: usize) -> &Graph {
        &self.graphs[m]
    }

    pub fn graphs(&self) -> &[Graph] {
        &self.graphs
    }

    pub fn declared_identity(&self) -> Option<usize> {
        self.identity
    }

    pub fn cartesian(&self) -> Option<&Cartesian> {
        self.cartesian.as_ref()
    }

    pub fn completeness(&self) -> Option<&Completeness> {
        self.complete.as_ref()
    }

    pub fn member_by_name(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn atom_index(&self, name: &str) -> Option<usize> {
        self.atoms.iter().position(|n| n == name)
    }

    /// First member containing `g`.
    pub fn first_containing(&self, g: &Graph) -> Option<usize> {
        self.graphs.iter().position(|big| contains_graph(big, g))
    }

    fn show_graph(&self, g: &Graph) -> String {
        graph_show(&self.atoms, g)
    }
}

impl Dco for FiniteDco {
    type Elem = usize;
    type Member = usize;

    fn eval(&self, m: &usize, a: &usize, _fuel: Fuel) -> Verdict<usize> {
        match self.graphs[*m][*a] {
            Some(b) => Verdict::Value(b),
            None => Verdict::Undefined,
        }
    }

    fn identity(&self) -> Result<usize> {
        self.identity
            .ok_or_else(|| Error::MissingWitness("identity".to_string()))
    }

    fn compose(&self, first: &usize, then: &usize, _fuel: Fuel) -> Result<usize> {
        let g = compose_graphs(&self.graphs[*first], &self.graphs[*then]);
        self.first_containing(&g).ok_or_else(|| {
            Error::MissingWitness(format!(
                "no member contains {} after {}",
                self.names[*then], self.names[*first]
            ))
        })
    }

    fn find_realizer(&self, pairs: &[(usize, usize)]) -> Search<usize> {
        if conflict(pairs).is_some() {
            return Search::Refuted;
        }
        match self
            .graphs
            .iter()
            .position(|g| pairs.iter().all(|&(x, y)| g[x] == Some(y)))
        {
            Some(m) => Search::Found(m),
            None => Search::Refuted,
        }
    }

    fn carrier(&self) -> Option<Vec<usize>> {
        Some((0..self.atoms.len()).collect())
    }

    fn show_elem(&self, a: &usize) -> String {
        self.atoms[*a].clone()
    }

    fn show_member(&self, m: &usize) -> String {
        self.names[*m].clone()
    }

    /// The declared top, or else the first atom whose constant function
    /// lies in the saturation.
    fn top(&self) -> Result<usize> {
        if let Some(c) = &self.cartesian {
            return Ok(c.top);
        }
        let n = self.size();
        (0..n)
            .find(|&c| self.first_containing(&constant_graph(n, c)).is_some())
            .ok_or_else(|| Error::NotApplicable("no constant function in the family".to_string()))
    }

    fn meet(&self, a: &usize, b: &usize, _fuel: Fuel) -> Result<usize> {
        let c = self.cartesian.as_ref().ok_or_else(super::not_cartesian)?;
        Ok(c.meet[*a][*b])
    }

    fn fst(&self) -> Result<usize> {
        Ok(self
            .cartesian
            .as_ref()
            .ok_or_else(super::not_cartesian)?
            .lambda)
    }

    fn snd(&self) -> Result<usize> {
        Ok(self
            .cartesian
            .as_ref()
            .ok_or_else(super::not_cartesian)?
            .rho)
    }

    fn pair(&self, a: &usize, b: &usize, _fuel: Fuel) -> Result<usize> {
        let c = self.cartesian.as_ref().ok_or_else(super::not_cartesian)?;
        if let Some(&g) = c.gamma.get(&(*a, *b)) {
            return Ok(g);
        }
        let target = meet_after(c, &self.graphs[*a], &self.graphs[*b]);
        self.first_containing(&target).ok_or_else(|| {
            Error::MissingWitness(format!(
                "no member contains the pairing of {} and {}",
                self.names[*a], self.names[*b]
            ))
        })
    }

    fn constant(&self, c: &usize, _fuel: Fuel) -> Result<usize> {
        self.first_containing(&constant_graph(self.size(), *c))
            .ok_or_else(|| {
                Error::MissingWitness(format!("constant {} not in the family", self.atoms[*c]))
            })
    }

    fn universal(&self) -> Result<usize> {
        Ok(self
            .complete
            .as_ref()
            .ok_or_else(super::not_complete)?
            .universal)
    }

    fn tilde(&self, a: &usize, _fuel: Fuel) -> Result<usize> {
        Ok(self
            .complete
            .as_ref()
            .ok_or_else(super::not_complete)?
            .tilde[*a])
    }
}

/// `∧ ∘ ⟨α, β⟩`.
fn meet_after(c: &Cartesian, a: &Graph, b: &Graph) -> Graph {
    a.iter()
        .zip(b)
        .map(|(x, y)| match (x, y) {
            (Some(x), Some(y)) => Some(c.meet[*x][*y]),
            _ => None,
        })
        .collect()
}

/// Identity membership and weak closure under composition, pair by pair.
pub fn check_dco_axioms(d: &FiniteDco) -> Report {
    let mut r = Report::new();
    let id = identity_graph(d.size());
    match d.identity {
        Some(m) if d.graphs[m] == id => r.push("identity", Status::Pass, d.names[m].clone()),
        Some(m) => r.push(
            "identity",
            Status::Fail,
            format!("declared identity `{}` is not the identity", d.names[m]),
        ),
        None => r.push("identity", Status::Fail, "identity missing"),
    }
    for a in 0..d.member_count() {
        for b in 0..d.member_count() {
            let name = format!("compose({},{})", d.names[a], d.names[b]);
            match d.compose(&a, &b, 0) {
                Ok(g) => r.push(name, Status::Pass, d.names[g].clone()),
                Err(_) => r.push(
                    name,
                    Status::Fail,
                    format!(
                        "no member contains {}",
                        d.show_graph(&compose_graphs(&d.graphs[a], &d.graphs[b]))
                    ),
                ),
            }
        }
    }
    r
}

/// Membership in the down-closure of the family.
pub fn saturated_contains(d: &FiniteDco, g: &Graph) -> bool {
    d.first_containing(g).is_some()
}

/// Strong closure of the saturation and the isomorphism `d ≅ sat(d)`.
pub fn check_saturation(d: &FiniteDco) -> Report {
    let mut r = Report::new();
    let sat: Vec<Graph> = all_partial_functions(d.size())
        .into_iter()
        .filter(|g| saturated_contains(d, g))
        .collect();
    let mut bad = None;
    'outer: for a in &sat {
        for b in &sat {
            if !saturated_contains(d, &compose_graphs(a, b)) {
                bad = Some((a.clone(), b.clone()));
                break 'outer;
            }
        }
    }
    match bad {
        None => r.push(
            "strong-closure",
            Status::Pass,
            format!("{} members in the saturation", sat.len()),
        ),
        Some((a, b)) => r.push(
            "strong-closure",
            Status::Fail,
            format!("{} after {}", d.show_graph(&b), d.show_graph(&a)),
        ),
    }
    // id : d → sat(d): each member is contained in a saturated member.
    let forward = d
        .graphs
        .iter()
        .all(|g| sat.iter().any(|s| contains_graph(s, g)));
    // id : sat(d) → d: each saturated member is contained in a member.
    let backward = sat.iter().all(|s| d.first_containing(s).is_some());
    r.push(
        "iso-with-saturation",
        Status::from_bool(forward && backward),
        "",
    );
    r
}

/// The product DCO `(A × B, {α × β})`; element `(a, b)` has index
/// `a · |B| + b`.
pub fn product(d1: &FiniteDco, d2: &FiniteDco) -> FiniteDco {
    let n2 = d2.size();
    let mut atoms = Vec::new();
    for a in &d1.atoms {
        for b in &d2.atoms {
            atoms.push(format!("({a},{b})"));
        }
    }
    let mut members = Vec::new();
    for (na, ga) in d1.names.iter().zip(&d1.graphs) {
        for (nb, gb) in d2.names.iter().zip(&d2.graphs) {
            let mut g = Vec::with_capacity(atoms.len());
            for x in 0..d1.size() {
                for y in 0..n2 {
                    g.push(match (ga[x], gb[y]) {
                        (Some(u), Some(v)) => Some(u * n2 + v),
                        _ => None,
                    });
                }
            }
            members.push((format!("{na}*{nb}"), g));
        }
    }
    let mut p = FiniteDco::new(atoms, members).expect("product of valid DCOs is valid");
    p.identity = match (d1.identity, d2.identity) {
        (Some(i), Some(j)) => Some(i * d2.member_count() + j),
        _ => None,
    };
    p
}

/// For a total `f : A → B`, a witness `α ↦ β` with `f ∘ α ⊆ β ∘ f`.
pub fn is_morphism(src: &FiniteDco, tgt: &FiniteDco, f: &[usize]) -> Option<Vec<usize>> {
    let mut witness = Vec::new();
    for ga in &src.graphs {
        let pairs: Vec<(usize, usize)> = ga
            .iter()
            .enumerate()
            .filter_map(|(x, y)| y.map(|y| (f[x], f[y])))
            .collect();
        witness.push(tgt.find_realizer(&pairs).found()?);
    }
    Some(witness)
}

/// `f ≤ g` for morphisms into `tgt`: a member `β` with `β ∘ f = g`.
pub fn leq_morphisms(tgt: &FiniteDco, f: &[usize], g: &[usize]) -> Search<usize> {
    leq(tgt, f, g)
}

/// All total functions `0..n → 0..m`, in odometer order.
pub fn all_functions(n: usize, m: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if m == 0 {
        if n == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    let mut cur = vec![0; n];
    loop {
        out.push(cur.clone());
        let mut i = 0;
        loop {
            if i == n {
                return out;
            }
            cur[i] += 1;
            if cur[i] < m {
                break;
            }
            cur[i] = 0;
            i += 1;
        }
    }
}

/// Projections are morphisms, and pairing is a morphism that is monotone
/// in both arguments, for every test domain.
pub fn check_product_universal(d1: &FiniteDco, d2: &FiniteDco, domains: &[&FiniteDco]) -> Report {
    let mut r = Report::new();
    let p = product(d1, d2);
    let n2 = d2.size();
    let pi1: Vec<usize> = (0..p.size()).map(|x| x / n2.max(1)).collect();
    let pi2: Vec<usize> = (0..p.size()).map(|x| x % n2.max(1)).collect();
    r.push(
        "projections",
        Status::from_bool(
            is_morphism(&p, d1, &pi1).is_some() && is_morphism(&p, d2, &pi2).is_some(),
        ),
        "",
    );
    for (k, c) in domains.iter().enumerate() {
        let fs: Vec<Vec<usize>> = all_functions(c.size(), d1.size())
            .into_iter()
            .filter(|f| is_morphism(c, d1, f).is_some())
            .collect();
        let gs: Vec<Vec<usize>> = all_functions(c.size(), d2.size())
            .into_iter()
            .filter(|g| is_morphism(c, d2, g).is_some())
            .collect();
        let pairing = |f: &[usize], g: &[usize]| -> Vec<usize> {
            f.iter().zip(g).map(|(a, b)| a * n2 + b).collect()
        };
        let mut status = Status::Pass;
        let mut detail = format!("{} x {} morphism pairs", fs.len(), gs.len());
        'outer: for f in &fs {
            for g in &gs {
                let h = pairing(f, g);
                if is_morphism(c, &p, &h).is_none() {
                    status = Status::Fail;
                    detail = format!("pairing {f:?},{g:?} is not a morphism");
                    break 'outer;
                }
                for f2 in &fs {
                    for g2 in &gs {
                        let both = leq(d1, f, f2).is_found() && leq(d2, g, g2).is_found();
                        let paired = leq(&p, &h, &pairing(f2, g2)).is_found();
                        if both != paired {
                            status = Status::Fail;
                            detail = format!("2-cells disagree at {f:?},{g:?} vs {f2:?},{g2:?}");
                            break 'outer;
                        }
                    }
                }
            }
        }
        r.push(format!("pairing/domain{k}"), status, detail);
    }
    r
}

/// For all `a`, `b` some member sends `a` to `b`.
pub fn is_shallow(d: &FiniteDco) -> bool {
    let n = d.size();
    (0..n).all(|a| (0..n).all(|b| d.graphs.iter().any(|g| g[a] == Some(b))))
}

/// Inhabitation, constants, shallowness, projection laws and pairing
/// witnesses, all exhaustively.
pub fn check_cartesian_shallow(d: &FiniteDco) -> Report {
    let mut r = Report::new();
    let n = d.size();
    r.push("inhabited", Status::from_bool(n > 0), format!("{n} atoms"));
    let missing = (0..n).find(|&c| !saturated_contains(d, &constant_graph(n, c)));
    match missing {
        None => r.push("constants", Status::Pass, ""),
        Some(c) => r.push(
            "constants",
            Status::Fail,
            format!("constant {} not in sat(F)", d.atoms[c]),
        ),
    }
    r.push("shallow", Status::from_bool(is_shallow(d)), "");
    let Some(c) = &d.cartesian else {
        r.push("projections", Status::Fail, "no cartesian structure");
        r.push("pairing", Status::Fail, "no cartesian structure");
        return r;
    };
    let mut proj = Status::Pass;
    let mut detail = String::new();
    'outer: for a in 0..n {
        for b in 0..n {
            let m = c.meet[a][b];
            if d.graphs[c.lambda][m] != Some(a) || d.graphs[c.rho][m] != Some(b) {
                proj = Status::Fail;
                detail = format!("at ({}, {})", d.atoms[a], d.atoms[b]);
                break 'outer;
            }
        }
    }
    r.push("projections", proj, detail);
    let mut pairing = Status::Pass;
    let mut detail = String::new();
    'pairs: for a in 0..d.member_count() {
        for b in 0..d.member_count() {
            let ok = d
                .pair(&a, &b, 0)
                .map(|g| contains_graph(&d.graphs[g], &meet_after(c, &d.graphs[a], &d.graphs[b])))
                .unwrap_or(false);
            if !ok {
                pairing = Status::Fail;
                detail = format!("({}, {})", d.names[a], d.names[b]);
                break 'pairs;
            }
        }
    }
    r.push("pairing", pairing, detail);
    r
}

/// `α(a ∧ b) ⪯ @(α̃(a) ∧ b)` and totality of every `α̃`, exhaustively.
pub fn check_functional_completeness(d: &FiniteDco) -> Report {
    let mut r = Report::new();
    let (Some(c), Some(fc)) = (&d.cartesian, &d.complete) else {
        r.push(
            "functional-completeness",
            Status::Fail,
            "needs cartesian and completeness data",
        );
        return r;
    };
    let n = d.size();
    let at = &d.graphs[fc.universal];
    for a in 0..d.member_count() {
        let t = &d.graphs[fc.tilde[a]];
        let total = t.iter().all(Option::is_some);
        let mut eq = Status::Pass;
        let mut detail = String::new();
        if total {
            'outer: for x in 0..n {
                for y in 0..n {
                    let lhs = d.graphs[a][c.meet[x][y]];
                    let rhs = t[x].and_then(|tx| at[c.meet[tx][y]]);
                    if lhs.is_some() && lhs != rhs {
                        eq = Status::Fail;
                        detail = format!("at ({}, {})", d.atoms[x], d.atoms[y]);
                        break 'outer;
                    }
                }
            }
        } else {
            eq = Status::Fail;
            detail = format!(
                "tilde({}) = {} is not total",
                d.names[a], d.names[fc.tilde[a]]
            );
        }
        r.push(format!("universal/{}", d.names[a]), eq, detail);
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dco::catalog;

    #[test]
    fn partial_function_count() {
        assert_eq!(all_partial_functions(2).len(), 9);
        assert_eq!(all_partial_functions(3).len(), 64);
        assert_eq!(all_partial_functions(0), vec![Vec::<Option<usize>>::new()]);
        assert_eq!(all_functions(2, 3).len(), 9);
        assert_eq!(all_functions(0, 0).len(), 1);
        assert_eq!(all_functions(1, 0).len(), 0);
    }

    #[test]
    fn axioms_on_small_examples() {
        assert_eq!(
            check_dco_axioms(&catalog::trivial()).overall(),
            Status::Pass
        );
        assert_eq!(
            check_dco_axioms(&catalog::const_zero()).overall(),
            Status::Pass
        );
        let r = check_dco_axioms(&catalog::swap_only());
        assert_eq!(r.status_of("identity"), Some(Status::Fail));
    }

    #[test]
    fn axiom_failure_names_pair() {
        // c0 then swap = c1, which is missing.
        let d = FiniteDco::numbered(
            2,
            vec![
                ("id", identity_graph(2)),
                ("c0", constant_graph(2, 0)),
                ("sw", vec![Some(1), Some(0)]),
            ],
        )
        .unwrap();
        let r = check_dco_axioms(&d);
        assert_eq!(r.status_of("compose(c0,sw)"), Some(Status::Fail));
    }

    #[test]
    fn product_of_const_zero_has_four_members() {
        let d = catalog::const_zero();
        let p = product(&d, &d);
        assert_eq!(p.size(), 4);
        assert_eq!(p.member_count(), 4);
        assert_eq!(check_dco_axioms(&p).overall(), Status::Pass);
        // c0 × c0 is the constant at (0,0).
        assert_eq!(p.graph(3), &constant_graph(4, 0));
        let t = catalog::trivial();
        let r = check_product_universal(&d, &d, &[&t, &d]);
        assert_eq!(r.overall(), Status::Pass, "{r:?}");
    }

    #[test]
    fn saturation_examples() {
        let d = catalog::const_zero();
        assert!(saturated_contains(&d, &vec![None, None]));
        assert!(saturated_contains(&d, &vec![Some(0), None]));
        assert!(!saturated_contains(&d, &constant_graph(2, 1)));
        assert_eq!(check_saturation(&d).overall(), Status::Pass);
        let t = catalog::trivial();
        assert!(saturated_contains(&t, &vec![None]));
    }

    #[test]
    fn leq_examples() {
        let d = catalog::const_zero();
        assert_eq!(leq_morphisms(&d, &[1], &[1]), Search::Found(0));
        assert_eq!(leq_morphisms(&d, &[1], &[0]), Search::Found(1));
        assert_eq!(leq_morphisms(&d, &[0], &[1]), Search::Refuted);
    }

    #[test]
    fn cartesian_checks() {
        assert_eq!(
            check_cartesian_shallow(&catalog::trivial()).overall(),
            Status::Pass
        );
        let r = check_cartesian_shallow(&catalog::const_zero());
        assert_eq!(r.status_of("constants"), Some(Status::Fail));
        assert_eq!(r.overall(), Status::Fail);
    }

    #[test]
    fn full_cartesian_data_fails_on_two_atoms() {
        // Any meet table on two atoms breaks a projection law.
        let d = catalog::all_functions_dco(2);
        for table in all_functions(4, 2) {
            let meet = vec![vec![table[0], table[1]], vec![table[2], table[3]]];
            for l in 0..d.member_count() {
                for rr in 0..d.member_count() {
                    let c = Cartesian {
                        top: 0,
                        meet: meet.clone(),
                        lambda: l,
                        rho: rr,
                        gamma: BTreeMap::new(),
                    };
                    let dc = d.clone().with_cartesian(c).unwrap();
                    assert_eq!(check_cartesian_shallow(&dc).overall(), Status::Fail);
                }
            }
        }
    }

    #[test]
    fn functional_completeness_on_trivial() {
        assert_eq!(
            check_functional_completeness(&catalog::trivial()).overall(),
            Status::Pass
        );
        let wrong = catalog::trivial_with_empty()
            .with_completeness(Completeness {
                universal: 1,
                tilde: vec![0, 0],
            })
            .unwrap();
        assert_eq!(
            check_functional_completeness(&wrong).overall(),
            Status::Fail
        );
    }

    #[test]
    fn non_total_tilde_is_named() {
        let d = catalog::trivial_with_empty()
            .with_completeness(Completeness {
                universal: 0,
                tilde: vec![1, 0],
            })
            .unwrap();
        let r = check_functional_completeness(&d);
        assert_eq!(r.status_of("universal/id"), Some(Status::Fail));
        assert_eq!(r.status_of("universal/empty"), Some(Status::Pass));
    }
}
