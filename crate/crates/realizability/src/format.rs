//! Line-based text format for finite DCOs, predicates, partitioned
//! assemblies and their morphisms.
//!
//! ```text
//! carrier 0 1
//! member id 0->0 1->1
//! member c0 0->0 1->0
//! identity id
//! pred phi i->0 j->1
//! object X i->0 j->1
//! object Y k->0
//! morphism f X Y i->k j->k by c0
//! ```
//!
//! Optional cartesian data: `top A`, one `meet A B C` line per pair,
//! `lambda M`, `rho M` and `pair M N G`. Functional completeness:
//! `universal M` and one `tilde M T` line per member. `#` starts a
//! comment. Inputs missing from a `member` line are undefined.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use realizability_core::dco::{Cartesian, Completeness, FiniteDco, Graph};
use realizability_core::pasm::{Mor, Obj};
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("{line}:{column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{line}:{column}: unknown atom `{atom}`")]
    UnknownAtom {
        line: usize,
        column: usize,
        atom: String,
    },
    #[error("{line}:{column}: member `{member}` is not functional: `{input}` maps to `{first}` and `{second}`")]
    NonFunctional {
        line: usize,
        column: usize,
        member: String,
        input: String,
        first: String,
        second: String,
    },
    #[error("missing identity declaration")]
    MissingIdentity,
    #[error("{0}")]
    Invalid(String),
}

/// A named predicate on named indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedPred {
    pub name: String,
    pub indices: Vec<String>,
    pub atoms: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorphismDecl {
    pub name: String,
    pub src: String,
    pub tgt: String,
    /// Target position for each source position.
    pub map: Vec<usize>,
    pub realizer: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DcoFile {
    pub dco: FiniteDco,
    pub preds: Vec<NamedPred>,
    pub objects: Vec<NamedPred>,
    pub morphisms: Vec<MorphismDecl>,
}

struct Tok<'a> {
    text: &'a str,
    column: usize,
}

fn tokens(line: &str) -> Vec<Tok<'_>> {
    let line = line.split('#').next().unwrap_or("");
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push(Tok {
                    text: &line[s..i],
                    column: line[..s].chars().count() + 1,
                });
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push(Tok {
            text: &line[s..],
            column: line[..s].chars().count() + 1,
        });
    }
    out
}

struct Parser {
    atoms: Vec<String>,
    members: Vec<(String, Graph)>,
    identity: Option<String>,
    top: Option<usize>,
    meet: BTreeMap<(usize, usize), usize>,
    lambda: Option<usize>,
    rho: Option<usize>,
    gamma: BTreeMap<(usize, usize), usize>,
    universal: Option<usize>,
    tilde: BTreeMap<usize, usize>,
    preds: Vec<NamedPred>,
    objects: Vec<NamedPred>,
    morphisms: Vec<MorphismDecl>,
}

impl Parser {
    fn atom(&self, line: usize, t: &Tok<'_>) -> Result<usize, FormatError> {
        self.atoms
            .iter()
            .position(|a| a == t.text)
            .ok_or_else(|| FormatError::UnknownAtom {
                line,
                column: t.column,
                atom: t.text.to_string(),
            })
    }

    fn member(&self, line: usize, t: &Tok<'_>) -> Result<usize, FormatError> {
        self.members
            .iter()
            .position(|(n, _)| n == t.text)
            .ok_or_else(|| syntax(line, t.column, format!("unknown member `{}`", t.text)))
    }
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax {
        line,
        column,
        message: message.into(),
    }
}

fn arrow<'a>(line: usize, t: &Tok<'a>) -> Result<(Tok<'a>, Tok<'a>), FormatError> {
    let (a, b) = t.text.split_once("->").ok_or_else(|| {
        syntax(
            line,
            t.column,
            format!("expected `x->y`, found `{}`", t.text),
        )
    })?;
    if a.is_empty() || b.is_empty() {
        return Err(syntax(
            line,
            t.column,
            format!("expected `x->y`, found `{}`", t.text),
        ));
    }
    Ok((
        Tok {
            text: a,
            column: t.column,
        },
        Tok {
            text: b,
            column: t.column + a.chars().count() + 2,
        },
    ))
}

fn expect_len(line: usize, toks: &[Tok<'_>], n: usize) -> Result<(), FormatError> {
    if toks.len() != n {
        let col = toks.get(n).or(toks.last()).map_or(1, |t| t.column);
        return Err(syntax(
            line,
            col,
            format!("`{}` takes {} arguments", toks[0].text, n - 1),
        ));
    }
    Ok(())
}

impl DcoFile {
    pub fn parse(src: &str) -> Result<DcoFile, FormatError> {
        let mut p = Parser {
            atoms: Vec::new(),
            members: Vec::new(),
            identity: None,
            top: None,
            meet: BTreeMap::new(),
            lambda: None,
            rho: None,
            gamma: BTreeMap::new(),
            universal: None,
            tilde: BTreeMap::new(),
            preds: Vec::new(),
            objects: Vec::new(),
            morphisms: Vec::new(),
        };
        let mut seen_carrier = false;
        for (k, raw) in src.lines().enumerate() {
            let line = k + 1;
            let toks = tokens(raw);
            let Some(head) = toks.first() else { continue };
            if !seen_carrier && head.text != "carrier" {
                return Err(syntax(
                    line,
                    head.column,
                    "the file must start with `carrier`",
                ));
            }
            match head.text {
                "carrier" => {
                    if seen_carrier {
                        return Err(syntax(line, head.column, "second `carrier` line"));
                    }
                    seen_carrier = true;
                    for t in &toks[1..] {
                        if p.atoms.iter().any(|a| a == t.text) {
                            return Err(syntax(
                                line,
                                t.column,
                                format!("atom `{}` listed twice", t.text),
                            ));
                        }
                        p.atoms.push(t.text.to_string());
                    }
                }
                "member" => {
                    let name = toks
                        .get(1)
                        .ok_or_else(|| syntax(line, head.column, "`member` needs a name"))?;
                    if p.members.iter().any(|(n, _)| n == name.text) {
                        return Err(syntax(
                            line,
                            name.column,
                            format!("member `{}` defined twice", name.text),
                        ));
                    }
                    let mut g: Graph = vec![None; p.atoms.len()];
                    for t in &toks[2..] {
                        let (a, b) = arrow(line, t)?;
                        let (x, y) = (p.atom(line, &a)?, p.atom(line, &b)?);
                        if let Some(prev) = g[x] {
                            if prev != y {
                                return Err(FormatError::NonFunctional {
                                    line,
                                    column: t.column,
                                    member: name.text.to_string(),
                                    input: a.text.to_string(),
                                    first: p.atoms[prev].clone(),
                                    second: b.text.to_string(),
                                });
                            }
                        }
                        g[x] = Some(y);
                    }
                    p.members.push((name.text.to_string(), g));
                }
                "identity" => {
                    expect_len(line, &toks, 2)?;
                    p.member(line, &toks[1])?;
                    p.identity = Some(toks[1].text.to_string());
                }
                "top" => {
                    expect_len(line, &toks, 2)?;
                    p.top = Some(p.atom(line, &toks[1])?);
                }
                "meet" => {
                    expect_len(line, &toks, 4)?;
                    let (a, b, c) = (
                        p.atom(line, &toks[1])?,
                        p.atom(line, &toks[2])?,
                        p.atom(line, &toks[3])?,
                    );
                    p.meet.insert((a, b), c);
                }
                "lambda" => {
                    expect_len(line, &toks, 2)?;
                    p.lambda = Some(p.member(line, &toks[1])?);
                }
                "rho" => {
                    expect_len(line, &toks, 2)?;
                    p.rho = Some(p.member(line, &toks[1])?);
                }
                "pair" => {
                    expect_len(line, &toks, 4)?;
                    let (a, b, g) = (
                        p.member(line, &toks[1])?,
                        p.member(line, &toks[2])?,
                        p.member(line, &toks[3])?,
                    );
                    p.gamma.insert((a, b), g);
                }
                "universal" => {
                    expect_len(line, &toks, 2)?;
                    p.universal = Some(p.member(line, &toks[1])?);
                }
                "tilde" => {
                    expect_len(line, &toks, 3)?;
                    let (a, t) = (p.member(line, &toks[1])?, p.member(line, &toks[2])?);
                    p.tilde.insert(a, t);
                }
                "pred" | "object" => {
                    let name = toks.get(1).ok_or_else(|| {
                        syntax(line, head.column, format!("`{}` needs a name", head.text))
                    })?;
                    let mut indices = Vec::new();
                    let mut atoms = Vec::new();
                    for t in &toks[2..] {
                        let (i, a) = arrow(line, t)?;
                        if indices.iter().any(|x: &String| x == i.text) {
                            return Err(syntax(
                                line,
                                t.column,
                                format!("index `{}` listed twice", i.text),
                            ));
                        }
                        indices.push(i.text.to_string());
                        atoms.push(p.atom(line, &a)?);
                    }
                    let np = NamedPred {
                        name: name.text.to_string(),
                        indices,
                        atoms,
                    };
                    if head.text == "pred" {
                        p.preds.push(np);
                    } else {
                        p.objects.push(np);
                    }
                }
                "morphism" => {
                    if toks.len() < 4 {
                        return Err(syntax(
                            line,
                            head.column,
                            "`morphism` needs a name, a source and a target",
                        ));
                    }
                    let find = |t: &Tok<'_>| {
                        p.objects.iter().find(|o| o.name == t.text).ok_or_else(|| {
                            syntax(line, t.column, format!("unknown object `{}`", t.text))
                        })
                    };
                    let (src, tgt) = (find(&toks[2])?, find(&toks[3])?);
                    let mut map = vec![None; src.indices.len()];
                    let mut realizer = None;
                    let mut rest = &toks[4..];
                    while let Some(t) = rest.first() {
                        if t.text == "by" {
                            let m = rest
                                .get(1)
                                .ok_or_else(|| syntax(line, t.column, "`by` needs a member"))?;
                            realizer = Some(p.member(line, m)?);
                            if rest.len() > 2 {
                                return Err(syntax(
                                    line,
                                    rest[2].column,
                                    "trailing input after the realizer",
                                ));
                            }
                            break;
                        }
                        let (i, j) = arrow(line, t)?;
                        let pi = src
                            .indices
                            .iter()
                            .position(|x| x == i.text)
                            .ok_or_else(|| {
                                syntax(
                                    line,
                                    i.column,
                                    format!("`{}` is not an index of `{}`", i.text, src.name),
                                )
                            })?;
                        let pj = tgt
                            .indices
                            .iter()
                            .position(|x| x == j.text)
                            .ok_or_else(|| {
                                syntax(
                                    line,
                                    j.column,
                                    format!("`{}` is not an index of `{}`", j.text, tgt.name),
                                )
                            })?;
                        if map[pi].is_some_and(|q| q != pj) {
                            return Err(syntax(
                                line,
                                t.column,
                                format!("index `{}` mapped twice", i.text),
                            ));
                        }
                        map[pi] = Some(pj);
                        rest = &rest[1..];
                    }
                    let map = map
                        .into_iter()
                        .enumerate()
                        .map(|(k, m)| {
                            m.ok_or_else(|| {
                                syntax(
                                    line,
                                    head.column,
                                    format!("index `{}` is not mapped", src.indices[k]),
                                )
                            })
                        })
                        .collect::<Result<Vec<_>, _>>()?;
                    p.morphisms.push(MorphismDecl {
                        name: toks[1].text.to_string(),
                        src: src.name.clone(),
                        tgt: tgt.name.clone(),
                        map,
                        realizer,
                    });
                }
                other => {
                    return Err(syntax(
                        line,
                        head.column,
                        format!("unknown keyword `{other}`"),
                    ))
                }
            }
        }
        if !seen_carrier {
            return Err(syntax(1, 1, "empty file"));
        }
        p.finish()
    }
}

impl Parser {
    fn finish(self) -> Result<DcoFile, FormatError> {
        let n = self.atoms.len();
        let m = self.members.len();
        let identity = self.identity.clone().ok_or(FormatError::MissingIdentity)?;
        let inv = |e: realizability_core::Error| FormatError::Invalid(e.to_string());
        let mut dco = FiniteDco::new(self.atoms.clone(), self.members.clone())
            .map_err(inv)?
            .with_identity(&identity)
            .map_err(inv)?;
        if let Some(top) = self.top {
            let mut meet = vec![vec![0; n]; n];
            for (a, row) in meet.iter_mut().enumerate() {
                for (b, cell) in row.iter_mut().enumerate() {
                    *cell = *self.meet.get(&(a, b)).ok_or_else(|| {
                        FormatError::Invalid(format!(
                            "meet of `{}` and `{}` is missing",
                            self.atoms[a], self.atoms[b]
                        ))
                    })?;
                }
            }
            let need = |x: Option<usize>, what: &str| {
                x.ok_or_else(|| FormatError::Invalid(format!("cartesian data needs `{what}`")))
            };
            dco = dco
                .with_cartesian(Cartesian {
                    top,
                    meet,
                    lambda: need(self.lambda, "lambda")?,
                    rho: need(self.rho, "rho")?,
                    gamma: self.gamma.clone(),
                })
                .map_err(inv)?;
        } else if !self.meet.is_empty()
            || self.lambda.is_some()
            || self.rho.is_some()
            || !self.gamma.is_empty()
        {
            return Err(FormatError::Invalid(String::from(
                "cartesian data needs `top`",
            )));
        }
        if let Some(universal) = self.universal {
            let tilde = (0..m)
                .map(|a| {
                    self.tilde.get(&a).copied().ok_or_else(|| {
                        FormatError::Invalid(format!("tilde of `{}` is missing", self.members[a].0))
                    })
                })
                .collect::<Result<Vec<_>, _>>()?;
            dco = dco
                .with_completeness(Completeness { universal, tilde })
                .map_err(inv)?;
        } else if !self.tilde.is_empty() {
            return Err(FormatError::Invalid(String::from(
                "`tilde` without `universal`",
            )));
        }
        Ok(DcoFile {
            dco,
            preds: self.preds,
            objects: self.objects,
            morphisms: self.morphisms,
        })
    }
}

impl DcoFile {
    pub fn from_dco(dco: FiniteDco) -> DcoFile {
        DcoFile {
            dco,
            preds: Vec::new(),
            objects: Vec::new(),
            morphisms: Vec::new(),
        }
    }

    /// Canonical text: one declaration per line, single spaces.
    pub fn to_text(&self) -> String {
        let d = &self.dco;
        let atoms = d.atoms();
        let mut out = String::new();
        let _ = writeln!(out, "carrier {}", atoms.join(" "));
        for k in 0..d.member_count() {
            let mut line = format!("member {}", d.name(k));
            for (x, y) in d.graph(k).iter().enumerate() {
                if let Some(y) = y {
                    let _ = write!(line, " {}->{}", atoms[x], atoms[*y]);
                }
            }
            let _ = writeln!(out, "{line}");
        }
        if let Some(id) = d.declared_identity() {
            let _ = writeln!(out, "identity {}", d.name(id));
        }
        if let Some(c) = d.cartesian() {
            let _ = writeln!(out, "top {}", atoms[c.top]);
            for (a, row) in c.meet.iter().enumerate() {
                for (b, v) in row.iter().enumerate() {
                    let _ = writeln!(out, "meet {} {} {}", atoms[a], atoms[b], atoms[*v]);
                }
            }
            let _ = writeln!(out, "lambda {}", d.name(c.lambda));
            let _ = writeln!(out, "rho {}", d.name(c.rho));
            for (&(a, b), &g) in &c.gamma {
                let _ = writeln!(out, "pair {} {} {}", d.name(a), d.name(b), d.name(g));
            }
        }
        if let Some(c) = d.completeness() {
            let _ = writeln!(out, "universal {}", d.name(c.universal));
            for (a, t) in c.tilde.iter().enumerate() {
                let _ = writeln!(out, "tilde {} {}", d.name(a), d.name(*t));
            }
        }
        for (kw, list) in [("pred", &self.preds), ("object", &self.objects)] {
            for p in list {
                let mut line = format!("{kw} {}", p.name);
                for (i, a) in p.indices.iter().zip(&p.atoms) {
                    let _ = write!(line, " {i}->{}", atoms[*a]);
                }
                let _ = writeln!(out, "{line}");
            }
        }
        for m in &self.morphisms {
            let src = self.object(&m.src).expect("declared source");
            let tgt = self.object(&m.tgt).expect("declared target");
            let mut line = format!("morphism {} {} {}", m.name, m.src, m.tgt);
            for (i, &j) in m.map.iter().enumerate() {
                let _ = write!(line, " {}->{}", src.indices[i], tgt.indices[j]);
            }
            if let Some(r) = m.realizer {
                let _ = write!(line, " by {}", d.name(r));
            }
            let _ = writeln!(out, "{line}");
        }
        out
    }

    pub fn pred(&self, name: &str) -> Option<&NamedPred> {
        self.preds.iter().find(|p| p.name == name)
    }

    pub fn object(&self, name: &str) -> Option<&NamedPred> {
        self.objects.iter().find(|p| p.name == name)
    }

    pub fn pasm_object(&self, name: &str) -> Option<Obj<usize>> {
        self.object(name).map(|o| Obj::new(o.atoms.clone()))
    }

    pub fn pasm_morphism(&self, name: &str) -> Option<MorphismDecl> {
        self.morphisms.iter().find(|m| m.name == name).cloned()
    }

    pub fn morphism_parts(&self, m: &MorphismDecl) -> (Obj<usize>, Obj<usize>) {
        (
            self.pasm_object(&m.src).expect("declared source"),
            self.pasm_object(&m.tgt).expect("declared target"),
        )
    }

    pub fn realized(&self, m: &MorphismDecl, realizer: usize) -> Mor<usize, usize> {
        let (src, tgt) = self.morphism_parts(m);
        Mor {
            src,
            tgt,
            map: m.map.clone(),
            realizer,
        }
    }
}

/// Strips comments, blank lines and redundant whitespace.
pub fn normalize(src: &str) -> String {
    let mut out = String::new();
    for line in src.lines() {
        let toks = tokens(line);
        if toks.is_empty() {
            continue;
        }
        let words: Vec<&str> = toks.iter().map(|t| t.text).collect();
        out.push_str(&words.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const CONST_ZERO: &str = "carrier 0 1\nmember id 0->0 1->1\nmember c0 0->0 1->0\nidentity id\n";

    #[test]
    fn round_trip() {
        let f = DcoFile::parse(CONST_ZERO).unwrap();
        assert_eq!(f.to_text(), CONST_ZERO);
        assert_eq!(f.dco, realizability_core::dco::catalog::const_zero());
    }

    #[test]
    fn columns_point_at_the_token() {
        let err = DcoFile::parse("carrier 0 1\nmember id 0->0 1->7\nidentity id\n").unwrap_err();
        assert_eq!(
            err,
            FormatError::UnknownAtom {
                line: 2,
                column: 19,
                atom: "7".into()
            }
        );
    }
}
