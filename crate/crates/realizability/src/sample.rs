//! Seeded random checks of the algebraic laws over combinatory logic.
//!
//! Every check draws from its own generator seeded from the user seed and
//! a fixed salt, so the outcome of one check does not depend on which
//! other checks ran before it.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use realizability_core::dco::{Dco, InducedDco, ReconstructedPca};
use realizability_core::enumerate::normal_forms_up_to;
use realizability_core::pasm::{Obj, PAsm};
use realizability_core::poly::{apply_all, compile, instantiate, Expr};
use realizability_core::{kleene_le, Fuel, Pca, Polynomial, Report, SkPca, Status, Term, Verdict};

pub fn rng(seed: u64, salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

fn leaf(rng: &mut ChaCha8Rng) -> Term {
    match rng.gen_range(0..6) {
        0 => Term::s(),
        1 => Term::k(),
        2 => Term::i(),
        3 => Term::named("a"),
        4 => Term::named("b"),
        _ => Term::named("c"),
    }
}

/// A random term with at most `size` leaves.
pub fn random_term(rng: &mut ChaCha8Rng, size: usize) -> Term {
    let n = rng.gen_range(1..=size.max(1));
    tree(rng, n, &mut |r| leaf(r))
}

fn tree<T>(rng: &mut ChaCha8Rng, n: usize, leaf: &mut impl FnMut(&mut ChaCha8Rng) -> T) -> T
where
    T: Applicable,
{
    if n <= 1 {
        return leaf(rng);
    }
    let left = rng.gen_range(1..n);
    let f = tree(rng, left, leaf);
    let x = tree(rng, n - left, leaf);
    T::apply(f, x)
}

trait Applicable {
    fn apply(f: Self, x: Self) -> Self;
}

impl Applicable for Term {
    fn apply(f: Term, x: Term) -> Term {
        Term::app(f, x)
    }
}

impl Applicable for Expr<Term> {
    fn apply(f: Self, x: Self) -> Self {
        Expr::app(f, x)
    }
}

/// Normal forms of size at most 4 and the named constants: arguments
/// whose own evaluation cannot run out of fuel.
pub fn element_pool() -> Vec<Term> {
    let mut pool = normal_forms_up_to(4);
    pool.push(Term::i());
    for n in ["a", "b", "c"] {
        pool.push(Term::named(n));
    }
    pool
}

/// A random polynomial of the given arity with at most `size` leaves,
/// each variable weighted like a constant.
pub fn random_polynomial(rng: &mut ChaCha8Rng, arity: usize, size: usize) -> Polynomial<Term> {
    let n = rng.gen_range(1..=size.max(1));
    let body = tree(rng, n, &mut |r: &mut ChaCha8Rng| {
        if arity > 0 && r.gen_bool(0.5) {
            Expr::Var(r.gen_range(1..=arity))
        } else {
            Expr::Const(leaf(r))
        }
    });
    Polynomial::new(arity, body).expect("variables within arity")
}

fn pick(rng: &mut ChaCha8Rng, pool: &[Term]) -> Term {
    pool.choose(rng).expect("nonempty pool").clone()
}

#[derive(Default)]
struct Tally {
    pass: usize,
    fail: usize,
    unknown: usize,
    first_failure: Option<String>,
}

impl Tally {
    fn add(&mut self, st: Status, what: impl FnOnce() -> String) {
        match st {
            Status::Pass => self.pass += 1,
            Status::Unknown => self.unknown += 1,
            Status::Fail => {
                self.fail += 1;
                if self.first_failure.is_none() {
                    self.first_failure = Some(what());
                }
            }
        }
    }

    fn status(&self) -> Status {
        if self.fail > 0 {
            Status::Fail
        } else if self.unknown > 0 {
            Status::Unknown
        } else {
            Status::Pass
        }
    }

    fn push(&self, r: &mut Report, name: &str) {
        let mut detail = format!(
            "{} pass, {} fail, {} unknown",
            self.pass, self.fail, self.unknown
        );
        if let Some(f) = &self.first_failure {
            detail.push_str("; first failure: ");
            detail.push_str(f);
        }
        r.push(name, self.status(), detail);
    }
}

fn show_args(args: &[Term]) -> String {
    args.iter()
        .map(|a| format!("({a})"))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Compiles random polynomials and compares `e · a⃗` with `t[a⃗]` on
/// random arguments.
pub fn combinatory_completeness(seed: u64, polys: usize, tuples: usize, fuel: Fuel) -> Report {
    let mut rng = rng(seed, 1);
    let pool = element_pool();
    let mut defined = Tally::default();
    let mut kleene = Tally::default();
    let (mut cases, mut exhausted) = (0usize, 0usize);
    for _ in 0..polys {
        let arity = rng.gen_range(0..=3);
        let t = random_polynomial(&mut rng, arity, 8);
        let e = match compile(&SkPca, &t, fuel) {
            Verdict::Value(e) => e,
            _ => {
                defined.add(Status::Fail, || format!("{t} did not compile"));
                continue;
            }
        };
        for _ in 0..tuples {
            let args: Vec<Term> = (0..arity).map(|_| pick(&mut rng, &pool)).collect();
            for n in 0..arity {
                let partial = apply_all(&SkPca, &e, &args[..n], fuel);
                let st = match partial {
                    Verdict::Value(_) => Status::Pass,
                    Verdict::Exhausted { .. } => Status::Unknown,
                    Verdict::Undefined => Status::Fail,
                };
                defined.add(st, || {
                    format!("{e} applied to {} of {}", n, show_args(&args))
                });
            }
            let direct = instantiate(&SkPca, &t, &args, fuel);
            let via = apply_all(&SkPca, &e, &args, fuel);
            cases += 1;
            if direct.is_exhausted() || via.is_exhausted() {
                exhausted += 1;
            }
            // Only instances with a value constrain the application.
            if direct.is_value() {
                let st = kleene_le(&direct, &via);
                kleene.add(st, || format!("{t} at {}", show_args(&args)));
            }
        }
    }
    let mut r = Report::new();
    defined.push(&mut r, "partial-applications-defined");
    kleene.push(&mut r, "instance-below-application");
    // Exhaustion on either side, including instances without a value.
    let rate = if cases == 0 {
        0.0
    } else {
        exhausted as f64 / cases as f64
    };
    r.push(
        "exhausted-rate",
        Status::Pass,
        format!(
            "{exhausted} of {cases} cases ran out of fuel ({:.1}%)",
            100.0 * rate
        ),
    );
    r
}

/// `k a b = a`, `p0 (p a b) = a`, `p1 (p a b) = b`, `s a b` defined.
pub fn pairing_laws(seed: u64, pairs: usize, fuel: Fuel) -> Report {
    let mut rng = rng(seed, 2);
    let pool = element_pool();
    let mut r = Report::new();
    let c = match realizability_core::pca::standard_combinators(&SkPca, fuel) {
        Ok(c) => c,
        Err(e) => {
            r.push("combinators", Status::Fail, e.to_string());
            return r;
        }
    };
    let mut laws = [
        Tally::default(),
        Tally::default(),
        Tally::default(),
        Tally::default(),
    ];
    for _ in 0..pairs {
        let (a, b) = (pick(&mut rng, &pool), pick(&mut rng, &pool));
        let eq = |v: Verdict<Term>, want: &Term| match v {
            Verdict::Value(x) => Status::from_bool(&x == want),
            Verdict::Exhausted { .. } => Status::Unknown,
            Verdict::Undefined => Status::Fail,
        };
        let kab = apply_all(&SkPca, &c.k, &[a.clone(), b.clone()], fuel);
        laws[0].add(eq(kab, &a), || format!("k ({a}) ({b})"));
        let pab = c.pair(&SkPca, &a, &b, fuel);
        let (l, rr) = match &pab {
            Verdict::Value(p) => (SkPca.apply(&c.p0, p, fuel), SkPca.apply(&c.p1, p, fuel)),
            _ => (pab.clone(), pab.clone()),
        };
        laws[1].add(eq(l, &a), || format!("p0 (p ({a}) ({b}))"));
        laws[2].add(eq(rr, &b), || format!("p1 (p ({a}) ({b}))"));
        let sab = apply_all(&SkPca, &c.s, &[a.clone(), b.clone()], fuel);
        let st = match sab {
            Verdict::Value(_) => Status::Pass,
            Verdict::Exhausted { .. } => Status::Unknown,
            Verdict::Undefined => Status::Fail,
        };
        laws[3].add(st, || format!("s ({a}) ({b})"));
    }
    for (t, name) in laws.iter().zip(["k", "p0", "p1", "s-defined"]) {
        t.push(&mut r, name);
    }
    r
}

fn induced(fuel: Fuel) -> Result<InducedDco<SkPca>, String> {
    InducedDco::new(SkPca, fuel).map_err(|e| e.to_string())
}

fn value_eq(v: Verdict<Term>, want: &Term) -> Status {
    match v {
        Verdict::Value(x) => Status::from_bool(&x == want),
        Verdict::Exhausted { .. } => Status::Unknown,
        Verdict::Undefined => Status::Fail,
    }
}

/// `λ(a ∧ b) = a`, `ρ(a ∧ b) = b` and `f x ∧ g x ⪯ ⟨f, g⟩ x` in the DCO
/// induced by combinatory logic.
pub fn induced_cartesian(seed: u64, samples: usize, fuel: Fuel) -> Report {
    let mut rng = rng(seed, 3);
    let pool = element_pool();
    let mut r = Report::new();
    let d = match induced(fuel) {
        Ok(d) => d,
        Err(e) => {
            r.push("induce", Status::Fail, e);
            return r;
        }
    };
    let (fst, snd) = (d.fst().expect("induced"), d.snd().expect("induced"));
    let mut t = [Tally::default(), Tally::default(), Tally::default()];
    for _ in 0..samples {
        let (a, b) = (pick(&mut rng, &pool), pick(&mut rng, &pool));
        let (f, g, x) = (
            pick(&mut rng, &pool),
            pick(&mut rng, &pool),
            pick(&mut rng, &pool),
        );
        let ab = match d.meet(&a, &b, fuel) {
            Ok(m) => m,
            Err(e) => {
                t[0].add(Status::Fail, || format!("meet of {a} and {b}: {e}"));
                continue;
            }
        };
        t[0].add(value_eq(d.eval(&fst, &ab, fuel), &a), || {
            format!("λ({a} ∧ {b})")
        });
        t[1].add(value_eq(d.eval(&snd, &ab, fuel), &b), || {
            format!("ρ({a} ∧ {b})")
        });
        let st = (|| {
            let gamma = d.pair(&f, &g, fuel).map_err(|e| e.to_string())?;
            let (fx, gx) = (d.eval(&f, &x, fuel), d.eval(&g, &x, fuel));
            let lhs = match (fx, gx) {
                (Verdict::Value(u), Verdict::Value(v)) => {
                    Verdict::Value(d.meet(&u, &v, fuel).map_err(|e| e.to_string())?)
                }
                (Verdict::Undefined, _) | (_, Verdict::Undefined) => Verdict::Undefined,
                _ => return Ok(Status::Unknown),
            };
            Ok::<_, String>(kleene_le(&lhs, &d.eval(&gamma, &x, fuel)))
        })();
        let st = st.unwrap_or(Status::Fail);
        t[2].add(st, || format!("⟨{f}, {g}⟩ at {x}"));
    }
    for (t, name) in t.iter().zip(["lambda", "rho", "gamma-contains"]) {
        t.push(&mut r, name);
    }
    r
}

/// Ten compiled binary operations used as members `α`.
pub fn compiled_members(seed: u64, fuel: Fuel) -> Vec<Term> {
    let mut rng = rng(seed, 4);
    let d = induced(fuel).expect("combinatory logic induces a DCO");
    let (fst, snd) = (d.fst().expect("induced"), d.snd().expect("induced"));
    let mut out = Vec::new();
    while out.len() < 10 {
        // α(a ∧ b) = t[a, b] for a random binary polynomial `t`.
        let t = random_polynomial(&mut rng, 2, 6);
        let unpack = Polynomial::new(
            1,
            substitute(t.body(), &|v| {
                let proj = if v == 1 { fst.clone() } else { snd.clone() };
                Expr::app(Expr::Const(proj), Expr::Var(1))
            }),
        )
        .expect("arity 1");
        if let Verdict::Value(e) = compile(&SkPca, &unpack, fuel) {
            out.push(e);
        }
    }
    out
}

fn substitute(e: &Expr<Term>, f: &dyn Fn(usize) -> Expr<Term>) -> Expr<Term> {
    match e {
        Expr::Var(v) => f(*v),
        Expr::Const(c) => Expr::Const(c.clone()),
        Expr::App(a, b) => Expr::app(substitute(a, f), substitute(b, f)),
    }
}

/// `α(a ∧ b) ⪯ u(α̃(a) ∧ b)` with `α̃(a)` defined, on sampled triples.
pub fn functional_completeness(seed: u64, samples: usize, fuel: Fuel) -> Report {
    let mut rng = rng(seed, 5);
    let pool = element_pool();
    let members = compiled_members(seed, fuel);
    let mut r = Report::new();
    let d = match induced(fuel) {
        Ok(d) => d,
        Err(e) => {
            r.push("induce", Status::Fail, e);
            return r;
        }
    };
    let u = d.universal().expect("induced");
    let mut t = [Tally::default(), Tally::default()];
    let mut diverging = 0usize;
    for _ in 0..samples {
        let alpha = pick(&mut rng, &members);
        let (a, b) = (pick(&mut rng, &pool), pick(&mut rng, &pool));
        let curried = match d.tilde(&alpha, fuel) {
            Ok(c) => c,
            Err(e) => {
                t[0].add(Status::Fail, || format!("tilde of {alpha}: {e}"));
                continue;
            }
        };
        let st = match d.eval(&curried, &a, fuel) {
            Verdict::Value(c) => {
                t[0].add(Status::Pass, String::new);
                let ab = d.meet(&a, &b, fuel).expect("meets of values are defined");
                let cb = d.meet(&c, &b, fuel).expect("meets of values are defined");
                let lhs = d.eval(&alpha, &ab, fuel);
                if lhs.is_exhausted() {
                    diverging += 1;
                    continue;
                }
                kleene_le(&lhs, &d.eval(&u, &cb, fuel))
            }
            Verdict::Exhausted { .. } => {
                t[0].add(Status::Unknown, String::new);
                Status::Unknown
            }
            Verdict::Undefined => {
                t[0].add(Status::Fail, || format!("{alpha}~ at {a}"));
                Status::Fail
            }
        };
        t[1].add(st, || format!("{alpha} at ({a}, {b})"));
    }
    r.push(
        "members",
        Status::Pass,
        format!("{} compiled members", members.len()),
    );
    for (t, name) in t.iter().zip(["tilde-defined", "universal-contains"]) {
        t.push(&mut r, name);
    }
    r.push(
        "no-value",
        Status::Pass,
        format!("{diverging} triples where α(a ∧ b) ran out of fuel"),
    );
    r
}

/// The algebra rebuilt from the induced DCO against combinatory logic:
/// application agrees on values, and the rebuilt `k` and `s` obey their
/// laws.
pub fn reconstruction(seed: u64, pairs: usize, law_samples: usize, fuel: Fuel) -> Report {
    let mut rng = rng(seed, 6);
    let pool = element_pool();
    let mut r = Report::new();
    let d = match induced(fuel) {
        Ok(d) => d,
        Err(e) => {
            r.push("induce", Status::Fail, e);
            return r;
        }
    };
    let pca = match ReconstructedPca::new(&d, fuel) {
        Ok(p) => p,
        Err(e) => {
            r.push("reconstruct", Status::Fail, e.to_string());
            return r;
        }
    };
    let mut app = Tally::default();
    let mut neither = 0usize;
    for _ in 0..pairs {
        let (a, b) = (pick(&mut rng, &pool), pick(&mut rng, &pool));
        let st = match (pca.apply(&a, &b, fuel), SkPca.apply(&a, &b, fuel)) {
            (Verdict::Value(x), Verdict::Value(y)) => Status::from_bool(x == y),
            (Verdict::Value(_), Verdict::Exhausted { .. })
            | (Verdict::Exhausted { .. }, Verdict::Value(_)) => Status::Unknown,
            (Verdict::Value(_), Verdict::Undefined) | (Verdict::Undefined, Verdict::Value(_)) => {
                Status::Fail
            }
            _ => {
                neither += 1;
                Status::Pass
            }
        };
        app.add(st, || format!("({a}) ({b})"));
    }
    let mut k = Tally::default();
    let mut s = Tally::default();
    for _ in 0..law_samples {
        let (a, b, c) = (
            pick(&mut rng, &pool),
            pick(&mut rng, &pool),
            pick(&mut rng, &pool),
        );
        let kab = apply_all(&pca, &pca.k(), &[a.clone(), b.clone()], fuel);
        k.add(value_eq(kab, &a), || format!("k ({a}) ({b})"));
        let sabc = apply_all(&pca, &pca.s(), &[a.clone(), b.clone(), c.clone()], fuel);
        let expect = reference_s(&a, &b, &c, fuel);
        let st = match apply_all(&pca, &pca.s(), &[a.clone(), b.clone()], fuel) {
            Verdict::Value(_) if expect.is_exhausted() && sabc.is_exhausted() => {
                neither += 1;
                continue;
            }
            Verdict::Value(_) => kleene_le(&expect, &sabc).and(kleene_le(&sabc, &expect)),
            Verdict::Exhausted { .. } => Status::Unknown,
            Verdict::Undefined => Status::Fail,
        };
        s.add(st, || format!("s ({a}) ({b}) ({c})"));
    }
    app.push(&mut r, "application");
    k.push(&mut r, "k");
    s.push(&mut r, "s");
    r.push(
        "no-value",
        Status::Pass,
        format!("{neither} instances without a value on either side"),
    );
    r
}

/// `a c (b c)` in combinatory logic.
fn reference_s(a: &Term, b: &Term, c: &Term, fuel: Fuel) -> Verdict<Term> {
    let ac = SkPca.apply(a, c, fuel);
    let bc = SkPca.apply(b, c, fuel);
    ac.and_then(|x| bc.and_then(|y| SkPca.apply(&x, &y, fuel)))
}

/// Products of random small objects over combinatory logic with the
/// constructed projection and pairing realizers.
pub fn sk_limits(seed: u64, instances: usize, fuel: Fuel) -> Report {
    let mut rng = rng(seed, 8);
    let pool = element_pool();
    let mut r = Report::new();
    let d = match induced(fuel) {
        Ok(d) => d,
        Err(e) => {
            r.push("induce", Status::Fail, e);
            return r;
        }
    };
    let c = PAsm::new(&d, fuel);
    let obj = |rng: &mut ChaCha8Rng| {
        let n = rng.gen_range(1..=2);
        Obj::new((0..n).map(|_| pick(rng, &pool)).collect::<Vec<_>>())
    };
    let mut t = [Tally::default(), Tally::default(), Tally::default()];
    for _ in 0..instances {
        let (w, x, y) = (obj(&mut rng), obj(&mut rng), obj(&mut rng));
        let show = || {
            format!(
                "{} × {} from {}",
                c.show_obj(&x),
                c.show_obj(&y),
                c.show_obj(&w)
            )
        };
        let p = match c.product(&x, &y) {
            Ok(p) => p,
            Err(e) => {
                t[0].add(Status::Fail, || format!("{}: {e}", show()));
                continue;
            }
        };
        t[0].add(c.check_realizer(&p.fst).and(c.check_realizer(&p.snd)), show);
        // Constant cones w → x and w → y.
        let (i, j) = (rng.gen_range(0..x.len()), rng.gen_range(0..y.len()));
        let cone = (|| {
            let f = c.mor_with(&w, &x, vec![i; w.len()], d.constant(&x.pred[i], fuel)?)?;
            let g = c.mor_with(&w, &y, vec![j; w.len()], d.constant(&y.pred[j], fuel)?)?;
            Ok::<_, realizability_core::Error>((f, g))
        })();
        let (f, g) = match cone {
            Ok(fg) => fg,
            Err(e) => {
                t[1].add(Status::Fail, || format!("{}: {e}", show()));
                continue;
            }
        };
        match c.pairing(&f, &g, &p) {
            Ok(h) => {
                t[1].add(c.check_realizer(&h), show);
                let legs = c
                    .compose(&h, &p.fst)
                    .and_then(|u| Ok((u, c.compose(&h, &p.snd)?)));
                let st = match legs {
                    Ok((u, v)) => Status::from_bool(u.map == f.map && v.map == g.map),
                    Err(realizability_core::Error::Exhausted { .. }) => Status::Unknown,
                    Err(_) => Status::Fail,
                };
                t[2].add(st, show);
            }
            Err(realizability_core::Error::Exhausted { .. }) => t[1].add(Status::Unknown, show),
            Err(e) => t[1].add(Status::Fail, || format!("{}: {e}", show())),
        }
    }
    for (t, name) in t.iter().zip(["projections", "pairing", "pairing-commutes"]) {
        t.push(&mut r, name);
    }
    r
}
