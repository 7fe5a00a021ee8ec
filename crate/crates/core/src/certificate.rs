//! Line-oriented certificate records and their verification.
//!
//! A record is `KIND key=value ...`. Verification recomputes every quantity
//! from raw adjacency, checks the defining inequalities, and requires each
//! field to equal its canonical recomputation so that any altered field is
//! caught and named.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::booster::{
    initial_configuration, plus_value, regularise, scale_k, BoosterCertificate,
    InitialConfigOutcome, Regularisation, SquadCertificate, Variant,
};
use crate::graph::{
    format_ids, parse_ids, BipartiteGraph, Graph, Part, TripartiteGraph, VertexSet,
};
use crate::patterns::{
    contains_ktt_with, contains_kttt_with, KttWitness, KtttWitness, SearchConfig, SearchError,
    WitnessError,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Record {
    pub kind: String,
    pub fields: Vec<(String, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertError {
    #[error("malformed record: {0}")]
    Malformed(String),
    #[error("field `{field}`: {reason}")]
    Field { field: String, reason: String },
    #[error(transparent)]
    Search(SearchError),
}

fn bad(field: &str, reason: impl Into<String>) -> CertError {
    CertError::Field {
        field: field.to_string(),
        reason: reason.into(),
    }
}

impl Record {
    pub fn new(kind: &str) -> Self {
        Record {
            kind: kind.to_string(),
            fields: Vec::new(),
        }
    }

    pub fn with(mut self, key: &str, value: impl fmt::Display) -> Self {
        self.fields.push((key.to_string(), value.to_string()));
        self
    }

    pub fn get(&self, key: &str) -> Result<&str, CertError> {
        self.fields
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
            .ok_or_else(|| bad(key, "missing"))
    }

    pub fn int(&self, key: &str) -> Result<usize, CertError> {
        let v = self.get(key)?;
        v.parse()
            .map_err(|_| bad(key, format!("`{v}` is not a count")))
    }

    pub fn ids(&self, key: &str) -> Result<Vec<usize>, CertError> {
        parse_ids(self.get(key)?).map_err(|e| bad(key, e))
    }

    /// First field of `expected` that differs here, then any extra field.
    pub fn compare(&self, expected: &Record) -> Result<(), CertError> {
        if self.kind != expected.kind {
            return Err(bad("kind", format!("expected {}", expected.kind)));
        }
        for (k, v) in &expected.fields {
            let got = self.get(k)?;
            if got != v {
                return Err(bad(k, format!("`{got}` differs from recomputed `{v}`")));
            }
        }
        if let Some((k, _)) = self
            .fields
            .iter()
            .find(|(k, _)| expected.fields.iter().all(|(e, _)| e != k))
        {
            return Err(bad(k, "unexpected field"));
        }
        Ok(())
    }
}

impl fmt::Display for Record {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.kind)?;
        for (k, v) in &self.fields {
            write!(f, " {k}={v}")?;
        }
        Ok(())
    }
}

impl FromStr for Record {
    type Err = CertError;

    fn from_str(line: &str) -> Result<Self, CertError> {
        let mut tokens = line.split_whitespace();
        let kind = tokens
            .next()
            .ok_or_else(|| CertError::Malformed("empty line".into()))?;
        let mut rec = Record::new(kind);
        for tok in tokens {
            let (k, v) = tok
                .split_once('=')
                .ok_or_else(|| CertError::Malformed(format!("token `{tok}` lacks `=`")))?;
            if rec.fields.iter().any(|(e, _)| e == k) {
                return Err(bad(k, "repeated"));
            }
            rec.fields.push((k.to_string(), v.to_string()));
        }
        Ok(rec)
    }
}

/// Non-empty lines not starting with `#`.
pub fn parse_records(text: &str) -> Result<Vec<Record>, CertError> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(str::parse)
        .collect()
}

pub fn ktt_record(w: &KttWitness) -> Record {
    Record::new("KTT")
        .with("t", w.t)
        .with("A", format_ids(w.left.clone()))
        .with("B", format_ids(w.right.clone()))
}

pub fn kttt_record(w: &KtttWitness) -> Record {
    Record::new("KTTT")
        .with("t", w.t)
        .with("A", format_ids(w.a.clone()))
        .with("B", format_ids(w.b.clone()))
        .with("C", format_ids(w.c.clone()))
}

/// `rank` is the position of `u -> v` among forward edges ordered by `(u, v)`.
pub fn boost_record(c: &BoosterCertificate, rank: usize) -> Record {
    Record::new("BOOST")
        .with("u", c.u)
        .with("v", c.v)
        .with("tau", c.tau)
        .with("r", c.r)
        .with("codeg", c.codegree)
        .with("compl", c.complement)
        .with("slack", c.slack())
        .with("rank", rank)
}

pub fn squad_record(s: &SquadCertificate) -> Record {
    Record::new("SQUAD")
        .with("tau", s.tau)
        .with("t", s.t)
        .with("k", s.k)
        .with("r", s.r)
        .with("part", s.part.number())
        .with("threshold", s.threshold())
        .with("verts", format_ids(s.vertices.clone()))
        .with("counts", format_ids(s.counts.clone()))
        .with("fminus", format_ids(s.f_minus.clone()))
}

pub fn icfg_record(out: &InitialConfigOutcome, tau: usize) -> Record {
    let rec = Record::new("ICFG")
        .with("tau", tau)
        .with("k", out.k)
        .with("fk", out.fk)
        .with("shift", out.shift)
        .with("variant", out.variant.name());
    match &out.variant {
        Variant::DenseBoosters {
            a,
            b,
            part,
            booster_edges,
        } => rec
            .with("part", part.number())
            .with("A", format_ids(a.iter()))
            .with("B", format_ids(b.iter()))
            .with("edges", booster_edges),
        Variant::HeavyVertices {
            x,
            part,
            heavy_counts,
            forward_degrees,
        } => rec
            .with("part", part.number())
            .with("X", format_ids(x.iter()))
            .with("counts", format_ids(heavy_counts.clone()))
            .with("fwd", format_ids(forward_degrees.clone())),
        Variant::Inconclusive { trail } => rec.with(
            "trail",
            trail
                .iter()
                .map(|e| format!("{}:{}", e.name, e.set.len()))
                .collect::<Vec<_>>()
                .join(","),
        ),
    }
}

fn tripartite<'a>(g: &'a Graph, kind: &str) -> Result<&'a TripartiteGraph, CertError> {
    match g {
        Graph::Tripartite(g) => Ok(g),
        Graph::Bipartite(_) => Err(bad("kind", format!("{kind} needs a tripartite graph"))),
    }
}

fn bipartite<'a>(g: &'a Graph, kind: &str) -> Result<&'a BipartiteGraph, CertError> {
    match g {
        Graph::Bipartite(h) => Ok(h),
        Graph::Tripartite(_) => Err(bad("kind", format!("{kind} needs a bipartite graph"))),
    }
}

fn witness_field(e: &WitnessError, last: &str) -> CertError {
    match e {
        WitnessError::WrongSize { field, .. }
        | WitnessError::NotSorted { field }
        | WitnessError::WrongPart { field, .. } => bad(field, e.to_string()),
        WitnessError::MissingEdge { .. } => bad(last, e.to_string()),
    }
}

fn reg_for(g: &TripartiteGraph, rec: &Record) -> Result<Regularisation, CertError> {
    let tau = rec.int("tau")?;
    regularise(g, tau as i64).map_err(|e| bad("tau", e.to_string()))
}

fn search<T>(r: Result<T, SearchError>) -> Result<T, CertError> {
    r.map_err(CertError::Search)
}

/// Verifies one record against `graph`.
pub fn verify_record(rec: &Record, graph: &Graph, cfg: &SearchConfig) -> Result<(), CertError> {
    match rec.kind.as_str() {
        "KTT" => {
            let h = bipartite(graph, "KTT")?;
            let t = rec.int("t")?;
            let w = KttWitness {
                t,
                left: rec.ids("A")?,
                right: rec.ids("B")?,
            };
            w.validate(h).map_err(|e| witness_field(&e, "B"))?;
            let canon = search(contains_ktt_with(h, t, cfg))?
                .ok_or_else(|| bad("t", "no K_{t,t} exists"))?;
            rec.compare(&ktt_record(&canon))
        }
        "KTTT" => {
            let g = tripartite(graph, "KTTT")?;
            let t = rec.int("t")?;
            let w = KtttWitness {
                t,
                a: rec.ids("A")?,
                b: rec.ids("B")?,
                c: rec.ids("C")?,
            };
            w.validate(g).map_err(|e| witness_field(&e, "C"))?;
            let canon = search(contains_kttt_with(g, t, cfg))?
                .ok_or_else(|| bad("t", "no K_{t,t,t} exists"))?;
            rec.compare(&kttt_record(&canon))
        }
        "BOOST" => verify_boost(rec, tripartite(graph, "BOOST")?),
        "SQUAD" => verify_squad(rec, tripartite(graph, "SQUAD")?),
        "ICFG" => verify_icfg(rec, tripartite(graph, "ICFG")?),
        other => Err(bad("kind", format!("unknown record kind `{other}`"))),
    }
}

fn verify_boost(rec: &Record, g: &TripartiteGraph) -> Result<(), CertError> {
    let reg = reg_for(g, rec)?;
    let (u, v) = (rec.int("u")?, rec.int("v")?);
    if u >= g.order() {
        return Err(bad("u", "out of range"));
    }
    if v >= g.order() || !g.has_edge(u, v) || g.part_of(v) != g.part_of(u).next() {
        return Err(bad("v", format!("{u} -> {v} is not a forward edge")));
    }
    let n = reg.n;
    let fp = |x: usize| {
        plus_value(
            reg.tau,
            n,
            (0..g.order())
                .filter(|&y| g.part_of(y) == g.part_of(x).next() && g.has_edge(x, y))
                .count(),
        )
    };
    let (fu, fv) = (fp(u), fp(v));
    if fv < fu {
        return Err(bad("v", format!("{u} -> {v} is not a booster")));
    }
    let third = Part::third(g.part_of(u), g.part_of(v)).expect("distinct parts");
    let codeg = (0..g.order())
        .filter(|&w| g.has_edge(u, w) && g.has_edge(v, w))
        .count();
    let compl = g
        .part_range(third)
        .filter(|&w| !g.has_edge(u, w) && !g.has_edge(v, w))
        .count();
    let r = fv - fu;
    let slack = codeg as i64 - reg.tau as i64 - r as i64;
    if slack < 0 || compl as i64 > slack {
        return Err(bad(
            "codeg",
            format!("booster inequalities fail: codegree {codeg}, complement {compl}"),
        ));
    }
    let rank = g.forward_edges().take_while(|&e| e != (u, v)).count();
    let expected = Record::new("BOOST")
        .with("u", u)
        .with("v", v)
        .with("tau", reg.tau)
        .with("r", r)
        .with("codeg", codeg)
        .with("compl", compl)
        .with("slack", slack)
        .with("rank", rank);
    rec.compare(&expected)
}

fn verify_squad(rec: &Record, g: &TripartiteGraph) -> Result<(), CertError> {
    let reg = reg_for(g, rec)?;
    let (t, k, r) = (rec.int("t")?, rec.int("k")?, rec.int("r")?);
    let part =
        Part::from_number(rec.int("part")?).ok_or_else(|| bad("part", "must be 1, 2 or 3"))?;
    let lk = scale_k(&reg);
    if k != lk {
        return Err(bad("k", format!("expected {lk}")));
    }
    if t == 0 || r == 0 {
        return Err(bad(if t == 0 { "t" } else { "r" }, "must be positive"));
    }
    let need = k.div_ceil(800);
    let verts = rec.ids("verts")?;
    let counts = rec.ids("counts")?;
    let fminus = rec.ids("fminus")?;
    if verts.len() < need {
        return Err(bad("verts", format!("fewer than {need} vertices")));
    }
    if counts.len() != verts.len() {
        return Err(bad("counts", "length differs from verts"));
    }
    if fminus.len() != verts.len() {
        return Err(bad("fminus", "length differs from verts"));
    }
    for (i, &v) in verts.iter().enumerate() {
        if v >= g.order() || g.part_of(v) != part {
            return Err(bad("verts", format!("{v} is not in {part}")));
        }
        if fminus[i] != reg.f_minus[v] || fminus[i] > r {
            return Err(bad(
                "fminus",
                format!("vertex {v} has f- = {}", reg.f_minus[v]),
            ));
        }
        let c = g
            .part_range(part.prev())
            .filter(|&u| g.has_edge(u, v) && reg.f_plus[u] + 2 * t * r <= reg.f_plus[v])
            .count();
        if counts[i] != c || c < need {
            return Err(bad(
                "counts",
                format!("vertex {v} has {c} backward boosters"),
            ));
        }
    }
    let (mut cv, mut cc, mut cf) = (Vec::new(), Vec::new(), Vec::new());
    for v in g.part_range(part) {
        let c = g
            .part_range(part.prev())
            .filter(|&u| g.has_edge(u, v) && reg.f_plus[u] + 2 * t * r <= reg.f_plus[v])
            .count();
        if reg.f_minus[v] <= r && c >= need {
            cv.push(v);
            cc.push(c);
            cf.push(reg.f_minus[v]);
        }
    }
    let expected = SquadCertificate {
        tau: reg.tau,
        t,
        k,
        r,
        part,
        vertices: cv,
        counts: cc,
        f_minus: cf,
    };
    rec.compare(&squad_record(&expected))
}

fn verify_icfg(rec: &Record, g: &TripartiteGraph) -> Result<(), CertError> {
    let reg = reg_for(g, rec)?;
    let k = rec.int("k")?;
    let part = || -> Result<Part, CertError> {
        Part::from_number(rec.int("part")?).ok_or_else(|| bad("part", "must be 1, 2 or 3"))
    };
    let set = |key: &str| -> Result<VertexSet, CertError> {
        let ids = rec.ids(key)?;
        if ids.iter().any(|&v| v >= g.order()) {
            return Err(bad(key, "id out of range"));
        }
        Ok(VertexSet::from_ids(g.order(), ids))
    };
    let claimed = match rec.get("variant")? {
        "DenseBoosters" => Some(Variant::DenseBoosters {
            a: set("A")?,
            b: set("B")?,
            part: part()?,
            booster_edges: rec.int("edges")?,
        }),
        "HeavyVertices" => {
            let x = set("X")?;
            Some(Variant::HeavyVertices {
                x,
                part: part()?,
                heavy_counts: rec.ids("counts")?,
                forward_degrees: rec.ids("fwd")?,
            })
        }
        "Inconclusive" => None,
        other => return Err(bad("variant", format!("unknown variant `{other}`"))),
    };
    if let Some(v) = &claimed {
        v.validate(g, &reg, k).map_err(|e| bad("variant", e))?;
    }
    let out = initial_configuration(g, &reg);
    rec.compare(&icfg_record(&out, reg.tau))
}
