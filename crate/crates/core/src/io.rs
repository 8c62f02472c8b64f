//! JSON documents for algebras, datums and maps.
//!
//! Canonical form: keys sorted, two-space indentation, sparse entries as
//! inline arrays sorted lexicographically with zero entries dropped, scalars
//! as strings (`"1/2"`, residues in `[0, p)`), trailing newline. Parsing is
//! strict: unknown keys, missing entries and out-of-range indices are
//! schema errors. `serialize(parse(t)) = t` for every canonical `t`.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::algebra::{Algebra, PreAlgebra};
use crate::bilinear::BilinearMap;
use crate::blocks::Block;
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::flag::{FlagDatum, PreFlagDatum};
use crate::linear::{LinearFunctional, LinearMap};
use crate::pre_unified::{PreDatumMaps, PreExtendingDatum, PRE_MAP_BLOCKS, PRE_MAP_NAMES};
use crate::products::{CrossedSystem, MatchedPair};
use crate::space::Space;
use crate::unified::{DatumMaps, ExtendingDatum, MAP_BLOCKS, MAP_NAMES};
use crate::vector::Vector;

pub const SCHEMAS: [&str; 9] =
    ["algebra", "prealgebra", "datum", "predatum", "matchedpair", "crossed", "flag", "preflag", "linmap"];

// Documents are read once per run; boxing the larger variants buys nothing.
#[allow(clippy::large_enum_variant)]
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Document {
    Algebra(Algebra),
    PreAlgebra(PreAlgebra),
    Datum(ExtendingDatum),
    PreDatum(PreExtendingDatum),
    MatchedPair(MatchedPair),
    Crossed(CrossedSystem),
    Flag(FlagDatum),
    PreFlag(PreFlagDatum),
    LinMap(LinearMap),
}

macro_rules! into_variant {
    ($fn:ident, $variant:ident, $ty:ty, $schema:literal) => {
        pub fn $fn(self) -> Result<$ty> {
            match self {
                Document::$variant(x) => Ok(x),
                other => Err(Error::schema("schema", format!("expected {:?}, found {:?}", $schema, other.schema()))),
            }
        }
    };
}

impl Document {
    pub fn schema(&self) -> &'static str {
        match self {
            Document::Algebra(_) => "algebra",
            Document::PreAlgebra(_) => "prealgebra",
            Document::Datum(_) => "datum",
            Document::PreDatum(_) => "predatum",
            Document::MatchedPair(_) => "matchedpair",
            Document::Crossed(_) => "crossed",
            Document::Flag(_) => "flag",
            Document::PreFlag(_) => "preflag",
            Document::LinMap(_) => "linmap",
        }
    }

    pub fn field(&self) -> Field {
        match self {
            Document::Algebra(a) => a.field(),
            Document::PreAlgebra(p) => p.field(),
            Document::Datum(d) => d.field(),
            Document::PreDatum(d) => d.field(),
            Document::MatchedPair(mp) => mp.a.field(),
            Document::Crossed(c) => c.a.field(),
            Document::Flag(fl) => fl.alg.field(),
            Document::PreFlag(fl) => fl.prealg.field(),
            Document::LinMap(m) => m.field(),
        }
    }

    into_variant!(into_algebra, Algebra, Algebra, "algebra");
    into_variant!(into_prealgebra, PreAlgebra, PreAlgebra, "prealgebra");
    into_variant!(into_datum, Datum, ExtendingDatum, "datum");
    into_variant!(into_predatum, PreDatum, PreExtendingDatum, "predatum");
    into_variant!(into_matched_pair, MatchedPair, MatchedPair, "matchedpair");
    into_variant!(into_crossed, Crossed, CrossedSystem, "crossed");
    into_variant!(into_flag, Flag, FlagDatum, "flag");
    into_variant!(into_preflag, PreFlag, PreFlagDatum, "preflag");
    into_variant!(into_linmap, LinMap, LinearMap, "linmap");
}

type Entries3 = Vec<(usize, usize, usize, String)>;
type Entries2 = Vec<(usize, usize, String)>;
type Entries1 = Vec<(usize, String)>;

/// Wire layout. Field order is alphabetical so serialization sorts keys.
#[derive(Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Raw {
    field: String,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    maps: BTreeMap<String, Entries2>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    scalars: BTreeMap<String, String>,
    schema: String,
    spaces: BTreeMap<String, Vec<String>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    tensors: BTreeMap<String, Entries3>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    vectors: BTreeMap<String, Entries1>,
}

struct Reader {
    raw: Raw,
    field: Field,
}

fn take<T>(map: &mut BTreeMap<String, T>, section: &str, key: &str) -> Result<T> {
    map.remove(key).ok_or_else(|| Error::schema(format!("{section}.{key}"), "missing entry"))
}

impl Reader {
    fn scalar_at(&self, path: &str, text: &str) -> Result<Scalar> {
        self.field.parse_scalar(text).map_err(|_| Error::schema(path, format!("bad scalar literal {text:?}")))
    }

    fn space(&mut self, key: &str) -> Result<Space> {
        let labels = take(&mut self.raw.spaces, "spaces", key)?;
        Space::new(labels).map_err(|e| Error::schema(format!("spaces.{key}"), e.to_string()))
    }

    /// Sparse entries into a dense buffer; rejects repeated coordinates.
    fn fill(&self, path: &str, dims: &[usize], entries: Vec<(Vec<usize>, String)>) -> Result<Vec<Scalar>> {
        let len: usize = dims.iter().product();
        let mut data = vec![self.field.zero(); len];
        let mut seen = vec![false; len];
        for (pos, (idx, text)) in entries.into_iter().enumerate() {
            let here = format!("{path}[{pos}]");
            let mut flat = 0;
            for (&i, &d) in idx.iter().zip(dims) {
                if i >= d {
                    return Err(Error::schema(here, format!("index {i} out of range for dimension {d}")));
                }
                flat = flat * d + i;
            }
            if std::mem::replace(&mut seen[flat], true) {
                return Err(Error::schema(here, "repeated coordinate"));
            }
            data[flat] = self.scalar_at(&here, &text)?;
        }
        Ok(data)
    }

    fn tensor(&mut self, name: &str, l: &Space, r: &Space, o: &Space) -> Result<BilinearMap> {
        let entries = take(&mut self.raw.tensors, "tensors", name)?;
        let path = format!("tensors.{name}");
        let entries = entries.into_iter().map(|(i, j, k, s)| (vec![i, j, k], s)).collect();
        let data = self.fill(&path, &[l.dim(), r.dim(), o.dim()], entries)?;
        BilinearMap::from_dense(self.field, l, r, o, data)
    }

    fn algebra(&mut self, name: &str, space: &Space) -> Result<Algebra> {
        Algebra::new(self.tensor(name, space, space, space)?)
    }

    fn prealgebra(&mut self, space: &Space) -> Result<PreAlgebra> {
        let prec = self.tensor("prec", space, space, space)?;
        let succ = self.tensor("succ", space, space, space)?;
        PreAlgebra::new(prec, succ)
    }

    /// Rows index `dst`, columns index `src`.
    fn map(&mut self, name: &str, src: &Space, dst: &Space) -> Result<LinearMap> {
        let entries = take(&mut self.raw.maps, "maps", name)?;
        let path = format!("maps.{name}");
        let entries = entries.into_iter().map(|(i, j, s)| (vec![i, j], s)).collect();
        let data = self.fill(&path, &[dst.dim(), src.dim()], entries)?;
        LinearMap::from_matrix(self.field, src, dst, data)
    }

    fn vector(&mut self, name: &str, dim: usize) -> Result<Vector> {
        let entries = take(&mut self.raw.vectors, "vectors", name)?;
        let path = format!("vectors.{name}");
        let entries = entries.into_iter().map(|(i, s)| (vec![i], s)).collect();
        self.fill(&path, &[dim], entries)
    }

    fn functional(&mut self, name: &str, src: &Space) -> Result<LinearFunctional> {
        let coeffs = self.vector(name, src.dim())?;
        LinearFunctional::new(self.field, src, coeffs)
    }

    fn scalar(&mut self, name: &str) -> Result<Scalar> {
        let text = take(&mut self.raw.scalars, "scalars", name)?;
        self.scalar_at(&format!("scalars.{name}"), &text)
    }

    /// Anything not consumed by the schema is an unknown key.
    fn finish(self) -> Result<()> {
        let leftovers = [
            ("spaces", self.raw.spaces.keys().next()),
            ("tensors", self.raw.tensors.keys().next()),
            ("maps", self.raw.maps.keys().next()),
            ("vectors", self.raw.vectors.keys().next()),
            ("scalars", self.raw.scalars.keys().next()),
        ];
        for (section, key) in leftovers {
            if let Some(k) = key {
                return Err(Error::schema(format!("{section}.{k}"), "unknown entry"));
            }
        }
        Ok(())
    }
}

fn pick<'a>(b: Block, a: &'a Space, v: &'a Space) -> &'a Space {
    match b {
        Block::A => a,
        Block::V => v,
    }
}

fn read(raw: Raw) -> Result<Document> {
    let field: Field = raw.field.parse()?;
    let schema = raw.schema.clone();
    let mut r = Reader { raw, field };
    let doc = match schema.as_str() {
        "algebra" => {
            let a = r.space("A")?;
            Document::Algebra(r.algebra("mul", &a)?)
        }
        "prealgebra" => {
            let a = r.space("A")?;
            Document::PreAlgebra(r.prealgebra(&a)?)
        }
        "datum" => {
            let (a, v) = (r.space("A")?, r.space("V")?);
            let alg = r.algebra("mul", &a)?;
            let mut maps = Vec::with_capacity(6);
            for (name, (bl, br, bo)) in MAP_NAMES.iter().zip(MAP_BLOCKS) {
                maps.push(r.tensor(name, pick(bl, &a, &v), pick(br, &a, &v), pick(bo, &a, &v))?);
            }
            let maps: [BilinearMap; 6] = maps.try_into().expect("six maps");
            Document::Datum(ExtendingDatum::new(alg, v, DatumMaps::from_array(maps))?)
        }
        "predatum" => {
            let (a, v) = (r.space("A")?, r.space("V")?);
            let p = r.prealgebra(&a)?;
            let mut maps = Vec::with_capacity(12);
            for (name, (bl, br, bo)) in PRE_MAP_NAMES.iter().zip(PRE_MAP_BLOCKS) {
                maps.push(r.tensor(name, pick(bl, &a, &v), pick(br, &a, &v), pick(bo, &a, &v))?);
            }
            let maps: [BilinearMap; 12] = maps.try_into().expect("twelve maps");
            Document::PreDatum(PreExtendingDatum::new(p, v, PreDatumMaps::from_array(maps))?)
        }
        "matchedpair" => {
            let (a, b) = (r.space("A")?, r.space("B")?);
            let (ma, mb) = (r.algebra("mul_a", &a)?, r.algebra("mul_b", &b)?);
            let act_l = r.tensor("act_l", &a, &b, &b)?;
            let act_r = r.tensor("act_r", &b, &a, &b)?;
            let coact_r = r.tensor("coact_r", &b, &a, &a)?;
            let coact_l = r.tensor("coact_l", &a, &b, &a)?;
            Document::MatchedPair(MatchedPair::new(ma, mb, act_l, act_r, coact_r, coact_l)?)
        }
        "crossed" => {
            let (a, b) = (r.space("A")?, r.space("B")?);
            let (ma, mb) = (r.algebra("mul_a", &a)?, r.algebra("mul_b", &b)?);
            let coact_r = r.tensor("coact_r", &b, &a, &a)?;
            let coact_l = r.tensor("coact_l", &a, &b, &a)?;
            let cocycle = r.tensor("cocycle", &b, &b, &a)?;
            Document::Crossed(CrossedSystem::new(ma, mb, coact_r, coact_l, cocycle)?)
        }
        "flag" => {
            let a = r.space("A")?;
            let alg = r.algebra("mul", &a)?;
            Document::Flag(FlagDatum {
                lambda: r.functional("lambda", &a)?,
                mu: r.functional("mu", &a)?,
                d: r.map("D", &a, &a)?,
                t: r.map("T", &a, &a)?,
                x0: r.vector("x0", a.dim())?,
                k0: r.scalar("k0")?,
                alg,
            })
        }
        "preflag" => {
            let a = r.space("A")?;
            let prealg = r.prealgebra(&a)?;
            let fl = PreFlagDatum {
                lambda_prec: r.functional("lambda_prec", &a)?,
                lambda_succ: r.functional("lambda_succ", &a)?,
                mu_prec: r.functional("mu_prec", &a)?,
                mu_succ: r.functional("mu_succ", &a)?,
                d_lt: r.map("D_lt", &a, &a)?,
                d_gt: r.map("D_gt", &a, &a)?,
                t_lt: r.map("T_lt", &a, &a)?,
                t_gt: r.map("T_gt", &a, &a)?,
                x0: r.vector("x0", a.dim())?,
                y0: r.vector("y0", a.dim())?,
                k0: r.scalar("k0")?,
                l0: r.scalar("l0")?,
                prealg,
            };
            fl.validate()?;
            Document::PreFlag(fl)
        }
        "linmap" => {
            let (src, dst) = (r.space("src")?, r.space("dst")?);
            Document::LinMap(r.map("map", &src, &dst)?)
        }
        other => return Err(Error::schema("schema", format!("unknown schema {other:?}"))),
    };
    r.finish()?;
    Ok(doc)
}

#[derive(Default)]
struct Writer {
    raw: Raw,
}

impl Writer {
    fn space(&mut self, key: &str, s: &Space) {
        self.raw.spaces.insert(key.into(), s.labels().to_vec());
    }

    fn tensor(&mut self, name: &str, m: &BilinearMap) {
        let entries = m.triples().into_iter().map(|(i, j, k, c)| (i, j, k, c.to_string())).collect();
        self.raw.tensors.insert(name.into(), entries);
    }

    fn map(&mut self, name: &str, m: &LinearMap) {
        let cols = m.src().dim();
        let entries = m
            .matrix()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(idx, c)| (idx / cols, idx % cols, c.to_string()))
            .collect();
        self.raw.maps.insert(name.into(), entries);
    }

    fn vector(&mut self, name: &str, v: &[Scalar]) {
        let entries = v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.to_string())).collect();
        self.raw.vectors.insert(name.into(), entries);
    }

    fn scalar(&mut self, name: &str, s: &Scalar) {
        self.raw.scalars.insert(name.into(), s.to_string());
    }

    fn prealgebra(&mut self, p: &PreAlgebra) {
        self.space("A", p.space());
        self.tensor("prec", p.prec());
        self.tensor("succ", p.succ());
    }
}

fn write(doc: &Document) -> Raw {
    let mut w = Writer::default();
    match doc {
        Document::Algebra(a) => {
            w.space("A", a.space());
            w.tensor("mul", a.product());
        }
        Document::PreAlgebra(p) => w.prealgebra(p),
        Document::Datum(d) => {
            w.space("A", d.alg().space());
            w.space("V", d.ext());
            w.tensor("mul", d.alg().product());
            for (name, m) in MAP_NAMES.iter().zip(d.maps().as_array()) {
                w.tensor(name, m);
            }
        }
        Document::PreDatum(d) => {
            w.prealgebra(d.prealg());
            w.space("V", d.ext());
            for (name, m) in PRE_MAP_NAMES.iter().zip(d.maps().as_array()) {
                w.tensor(name, m);
            }
        }
        Document::MatchedPair(mp) => {
            w.space("A", mp.a.space());
            w.space("B", mp.b.space());
            w.tensor("mul_a", mp.a.product());
            w.tensor("mul_b", mp.b.product());
            w.tensor("act_l", &mp.act_l);
            w.tensor("act_r", &mp.act_r);
            w.tensor("coact_r", &mp.coact_r);
            w.tensor("coact_l", &mp.coact_l);
        }
        Document::Crossed(c) => {
            w.space("A", c.a.space());
            w.space("B", c.b.space());
            w.tensor("mul_a", c.a.product());
            w.tensor("mul_b", c.b.product());
            w.tensor("coact_r", &c.coact_r);
            w.tensor("coact_l", &c.coact_l);
            w.tensor("cocycle", &c.cocycle);
        }
        Document::Flag(fl) => {
            w.space("A", fl.alg.space());
            w.tensor("mul", fl.alg.product());
            w.vector("lambda", fl.lambda.coeffs());
            w.vector("mu", fl.mu.coeffs());
            w.map("D", &fl.d);
            w.map("T", &fl.t);
            w.vector("x0", &fl.x0);
            w.scalar("k0", &fl.k0);
        }
        Document::PreFlag(fl) => {
            w.prealgebra(&fl.prealg);
            w.vector("lambda_prec", fl.lambda_prec.coeffs());
            w.vector("lambda_succ", fl.lambda_succ.coeffs());
            w.vector("mu_prec", fl.mu_prec.coeffs());
            w.vector("mu_succ", fl.mu_succ.coeffs());
            w.map("D_lt", &fl.d_lt);
            w.map("D_gt", &fl.d_gt);
            w.map("T_lt", &fl.t_lt);
            w.map("T_gt", &fl.t_gt);
            w.vector("x0", &fl.x0);
            w.vector("y0", &fl.y0);
            w.scalar("k0", &fl.k0);
            w.scalar("l0", &fl.l0);
        }
        Document::LinMap(m) => {
            w.space("src", m.src());
            w.space("dst", m.dst());
            w.map("map", m);
        }
    }
    w.raw.field = doc.field().to_string();
    w.raw.schema = doc.schema().into();
    w.raw
}

/// Objects one key per line; arrays of plain values inline.
pub fn render(v: &Value) -> String {
    let mut out = String::new();
    render_into(v, 0, &mut out);
    out.push('\n');
    out
}

fn render_into(v: &Value, indent: usize, out: &mut String) {
    let pad = |n: usize| " ".repeat(n);
    match v {
        Value::Object(map) if !map.is_empty() => {
            out.push_str("{\n");
            for (i, (k, val)) in map.iter().enumerate() {
                out.push_str(&pad(indent + 2));
                out.push_str(&serde_json::to_string(k).expect("string"));
                out.push_str(": ");
                render_into(val, indent + 2, out);
                out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push('}');
        }
        Value::Array(items) if items.iter().any(|x| x.is_array() || x.is_object()) => {
            out.push_str("[\n");
            for (i, val) in items.iter().enumerate() {
                out.push_str(&pad(indent + 2));
                render_into(val, indent + 2, out);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push(']');
        }
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(|x| serde_json::to_string(x).expect("value")).collect();
            out.push('[');
            out.push_str(&parts.join(", "));
            out.push(']');
        }
        other => out.push_str(&serde_json::to_string(other).expect("value")),
    }
}

pub fn parse(text: &str) -> Result<Document> {
    let value: Value = serde_json::from_str(text).map_err(|e| Error::Syntax {
        line: e.line(),
        col: e.column(),
        msg: e.to_string(),
    })?;
    let raw: Raw = serde_path_to_error::deserialize(value).map_err(|e| {
        let path = e.path().to_string();
        Error::schema(if path == "." { "document".to_string() } else { path }, e.inner().to_string())
    })?;
    read(raw)
}

pub fn serialize(doc: &Document) -> String {
    render(&serde_json::to_value(write(doc)).expect("plain data"))
}

/// `serialize(parse(text))`.
pub fn canonicalize(text: &str) -> Result<String> {
    Ok(serialize(&parse(text)?))
}

pub fn read_file(path: impl AsRef<Path>) -> Result<Document> {
    parse(&std::fs::read_to_string(path)?)
}

pub fn write_file(path: impl AsRef<Path>, doc: &Document) -> Result<()> {
    Ok(std::fs::write(path, serialize(doc))?)
}
