//! The structured-text spec file: JSON with a top-level `kind`, dimensions and
//! nested arrays of expression strings in `x1..xn`.

use std::fmt;

use ha2kit::graded_geometry::Chart;
use ha2kit::symbolic::{parse, Poly, Rational};
use ha2kit::{Algebroid1Data, Connection, Error, HA2Data, Order2Blocks, PointHAData, Ruth2Data, RuthMorphism};
use serde_json::{Map, Value};

/// A parsed and validated spec file.
#[derive(Clone, Debug, PartialEq)]
pub enum SpecFile {
    Algebroid1(Algebroid1Data),
    Ha2(HA2Data),
    PointHa(PointHAData),
    /// A representation with an optional morphism to the adjoint representation.
    Ruth2(Ruth2Data, Option<RuthMorphism>),
    Connection(Connection),
}

impl SpecFile {
    /// The `kind` tag.
    pub fn kind(&self) -> &'static str {
        match self {
            SpecFile::Algebroid1(_) => "algebroid1",
            SpecFile::Ha2(_) => "ha2",
            SpecFile::PointHa(_) => "point_ha",
            SpecFile::Ruth2(..) => "ruth2",
            SpecFile::Connection(_) => "connection",
        }
    }
}

/// An input error with an optional 1-based source position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InputError {
    pub message: String,
    pub line: Option<usize>,
    pub column: Option<usize>,
}

impl InputError {
    fn new(message: impl Into<String>) -> Self {
        InputError {
            message: message.into(),
            line: None,
            column: None,
        }
    }
}

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.line, self.column) {
            (Some(l), Some(c)) => write!(f, "line {l}, column {c}: {}", self.message),
            _ => f.write_str(&self.message),
        }
    }
}

impl From<Error> for InputError {
    fn from(e: Error) -> Self {
        InputError::new(e.to_string())
    }
}

type Res<T> = std::result::Result<T, InputError>;

fn position_of(src: &str, byte: usize) -> (usize, usize) {
    let before = &src[..byte];
    let line = before.matches('\n').count() + 1;
    let col = before.rsplit('\n').next().map_or(0, |s| s.chars().count()) + 1;
    (line, col)
}

struct Reader<'a> {
    src: &'a str,
    obj: &'a Map<String, Value>,
}

impl<'a> Reader<'a> {
    fn field(&self, key: &str) -> Option<&'a Value> {
        self.obj.get(key)
    }

    fn dim(&self, key: &str) -> Res<usize> {
        match self.field(key) {
            Some(Value::Number(n)) => n
                .as_u64()
                .map(|v| v as usize)
                .ok_or_else(|| InputError::new(format!("`{key}` must be a nonnegative integer"))),
            Some(_) => Err(InputError::new(format!("`{key}` must be a nonnegative integer"))),
            None => Err(InputError::new(format!("missing `{key}`"))),
        }
    }

    fn expr(&self, v: &Value, path: &str, names: &[String]) -> Res<Poly> {
        let text = match v {
            Value::String(s) => s.clone(),
            Value::Number(n) => n.to_string(),
            _ => return Err(InputError::new(format!("{path}: expected an expression string"))),
        };
        parse(&text, names).map_err(|e| {
            let offset = match &e {
                Error::SyntaxError { position, .. } | Error::UnknownVariable { position, .. } => *position,
                _ => 0,
            };
            let mut err = InputError::new(format!("{path}: {e}"));
            let literal = serde_json::to_string(&text).unwrap_or_default();
            if let Some(at) = self.src.find(&literal) {
                let start = if matches!(v, Value::String(_)) { at + 1 } else { at };
                let (line, col) = position_of(self.src, start + offset.min(text.len()));
                err.line = Some(line);
                err.column = Some(col);
            }
            err
        })
    }

    fn tensor(&self, v: &Value, path: &str, dims: &[usize], names: &[String]) -> Res<Tensor> {
        if dims.is_empty() {
            return self.expr(v, path, names).map(Tensor::Leaf);
        }
        let items = v
            .as_array()
            .ok_or_else(|| InputError::new(format!("{path}: expected an array of length {}", dims[0])))?;
        if items.len() != dims[0] {
            return Err(InputError::new(format!(
                "{path}: expected {} entries, found {}",
                dims[0],
                items.len()
            )));
        }
        items
            .iter()
            .enumerate()
            .map(|(k, item)| self.tensor(item, &format!("{path}/{k}"), &dims[1..], names))
            .collect::<Res<Vec<_>>>()
            .map(Tensor::Node)
    }

    fn array(&self, key: &str, dims: &[usize], names: &[String], required: bool) -> Res<Tensor> {
        match self.field(key) {
            Some(v) => self.tensor(v, &format!("/{key}"), dims, names),
            None if required => Err(InputError::new(format!("missing `{key}`"))),
            None => Ok(Tensor::zeros(dims)),
        }
    }

    fn sub(&self, key: &str) -> Res<Option<Reader<'a>>> {
        match self.field(key) {
            None | Some(Value::Null) => Ok(None),
            Some(Value::Object(obj)) => Ok(Some(Reader { src: self.src, obj })),
            Some(_) => Err(InputError::new(format!("`{key}` must be an object"))),
        }
    }
}

#[derive(Clone, Debug)]
enum Tensor {
    Leaf(Poly),
    Node(Vec<Tensor>),
}

impl Tensor {
    fn zeros(dims: &[usize]) -> Tensor {
        match dims.split_first() {
            None => Tensor::Leaf(Poly::zero()),
            Some((&d, rest)) => Tensor::Node((0..d).map(|_| Tensor::zeros(rest)).collect()),
        }
    }

    fn children(self) -> Vec<Tensor> {
        match self {
            Tensor::Node(v) => v,
            Tensor::Leaf(_) => unreachable!("rank checked on read"),
        }
    }

    fn leaf(self) -> Poly {
        match self {
            Tensor::Leaf(p) => p,
            Tensor::Node(_) => unreachable!("rank checked on read"),
        }
    }

    fn d1(self) -> Vec<Poly> {
        self.children().into_iter().map(Tensor::leaf).collect()
    }

    fn d2(self) -> Vec<Vec<Poly>> {
        self.children().into_iter().map(Tensor::d1).collect()
    }

    fn d3(self) -> Vec<Vec<Vec<Poly>>> {
        self.children().into_iter().map(Tensor::d2).collect()
    }

    fn d4(self) -> Vec<Vec<Vec<Vec<Poly>>>> {
        self.children().into_iter().map(Tensor::d3).collect()
    }
}

fn constants3(t: Vec<Vec<Vec<Poly>>>, key: &str) -> Res<Vec<Vec<Vec<Rational>>>> {
    t.into_iter()
        .map(|a| a.into_iter().map(|b| constants(b, key)).collect())
        .collect()
}

fn constants(row: Vec<Poly>, key: &str) -> Res<Vec<Rational>> {
    row.into_iter()
        .map(|p| p.as_constant().ok_or_else(|| InputError::new(format!("/{key}: entries must be rational constants"))))
        .collect()
}

fn algebroid(rd: &Reader, n: usize, r: usize, names: &[String]) -> Res<Algebroid1Data> {
    let anchor = rd.array("anchor", &[n, r], names, true)?.d2();
    let bracket = rd.array("bracket", &[r, r, r], names, false)?.d3();
    Ok(Algebroid1Data::new(n, r, anchor, bracket)?)
}

/// Parses and validates a spec file.
pub fn parse_spec(src: &str) -> Res<SpecFile> {
    let value: Value = serde_json::from_str(src).map_err(|e| InputError {
        message: format!("malformed JSON: {}", e.to_string().split(" at line ").next().unwrap_or_default()),
        line: Some(e.line()),
        column: Some(e.column()),
    })?;
    let obj = value.as_object().ok_or_else(|| InputError::new("top level must be an object"))?;
    let rd = Reader { src, obj };
    let kind = rd
        .field("kind")
        .and_then(Value::as_str)
        .ok_or_else(|| InputError::new("missing string field `kind`"))?;
    match kind {
        "algebroid1" => {
            let (n, r) = (rd.dim("base_dim")?, rd.dim("rank_A")?);
            let names = Chart::base(n).names().to_vec();
            Ok(SpecFile::Algebroid1(algebroid(&rd, n, r, &names)?))
        }
        "ha2" => {
            let (n, r, m) = (rd.dim("base_dim")?, rd.dim("rank_A")?, rd.dim("rank_C")?);
            let names = Chart::base(n).names().to_vec();
            let alg = algebroid(&rd, n, r, &names)?;
            let b = Order2Blocks {
                q_a_ij: rd.array("Q_a_ij", &[n, r, r], &names, false)?.d3(),
                q_a_mu: rd.array("Q_a_mu", &[n, m], &names, false)?.d2(),
                q_mu_i: rd.array("Q_mu_i", &[m, r], &names, false)?.d2(),
                q_mu_ij: rd.array("Q_mu_ij", &[m, r, r], &names, false)?.d3(),
                q_mu_nui: rd.array("Q_mu_nui", &[m, m, r], &names, false)?.d3(),
                q_mu_ijk: rd.array("Q_mu_ijk", &[m, r, r, r], &names, false)?.d4(),
            };
            Ok(SpecFile::Ha2(HA2Data::new(alg, m, b)?))
        }
        "point_ha" => {
            let (r, m) = (rd.dim("rank_A")?, rd.dim("rank_C")?);
            let names: Vec<String> = Vec::new();
            let bracket = constants3(rd.array("bracket", &[r, r, r], &names, false)?.d3(), "bracket")?;
            let pa = rd
                .array("partial", &[m, r], &names, false)?
                .d2()
                .into_iter()
                .map(|row| constants(row, "partial"))
                .collect::<Res<_>>()?;
            let beta = constants3(rd.array("beta", &[m, r, r], &names, false)?.d3(), "beta")?;
            let box_ = constants3(rd.array("box", &[m, r, m], &names, false)?.d3(), "box")?;
            let omega_bar = rd
                .array("omega_bar", &[m, r, r, r], &names, false)?
                .d4()
                .into_iter()
                .map(|t| constants3(t, "omega_bar"))
                .collect::<Res<_>>()?;
            Ok(SpecFile::PointHa(PointHAData::new(r, m, bracket, pa, beta, box_, omega_bar)?))
        }
        "ruth2" => {
            let (n, r) = (rd.dim("base_dim")?, rd.dim("rank_A")?);
            let (f0, f1) = (rd.dim("rank_F0")?, rd.dim("rank_F1")?);
            let names = Chart::base(n).names().to_vec();
            let alg = algebroid(&rd, n, r, &names)?;
            let partial = rd.array("partial", &[f1, f0], &names, true)?.d2();
            let conn0 = rd.array("conn0", &[r, f0, f0], &names, false)?.d3();
            let conn1 = rd.array("conn1", &[r, f1, f1], &names, false)?.d3();
            let k = rd.array("K", &[r, r, f0, f1], &names, false)?.d4();
            let rep = Ruth2Data::new(alg, partial, conn0, conn1, k)?;
            let phi = match rd.sub("morphism")? {
                None => None,
                Some(m) => Some(RuthMorphism {
                    phi0_deg0: m.array("Phi0_deg0", &[r, f0], &names, true)?.d2(),
                    phi0_deg1: m.array("Phi0_deg1", &[n, f1], &names, true)?.d2(),
                    phi1: m.array("Phi1", &[r, r, f1], &names, false)?.d3(),
                }),
            };
            Ok(SpecFile::Ruth2(rep, phi))
        }
        "connection" => {
            let (n, r) = (rd.dim("base_dim")?, rd.dim("rank_A")?);
            let names = Chart::base(n).names().to_vec();
            let gamma = rd.array("Gamma", &[r, n, r], &names, false)?.d3();
            Ok(SpecFile::Connection(Connection::new(n, r, gamma)?))
        }
        other => Err(InputError::new(format!(
            "unknown kind `{other}`; expected algebroid1, ha2, point_ha, ruth2 or connection"
        ))),
    }
}

trait ToValue {
    fn to_value(&self, names: &[String]) -> Value;
}

impl ToValue for Poly {
    fn to_value(&self, names: &[String]) -> Value {
        Value::String(self.to_string_with(names))
    }
}

impl ToValue for Rational {
    fn to_value(&self, _: &[String]) -> Value {
        Value::String(self.to_string())
    }
}

impl<T: ToValue> ToValue for Vec<T> {
    fn to_value(&self, names: &[String]) -> Value {
        Value::Array(self.iter().map(|t| t.to_value(names)).collect())
    }
}

fn put(obj: &mut Map<String, Value>, key: &str, v: Value) {
    obj.insert(key.to_string(), v);
}

fn put_algebroid(obj: &mut Map<String, Value>, a: &Algebroid1Data, names: &[String]) {
    put(obj, "anchor", a.anchor.to_value(names));
    put(obj, "bracket", a.bracket.to_value(names));
}

/// The JSON value of a spec file, keys in a fixed order.
pub fn to_value(spec: &SpecFile) -> Value {
    let mut o = Map::new();
    put(&mut o, "kind", Value::String(spec.kind().into()));
    match spec {
        SpecFile::Algebroid1(a) => {
            let names = Chart::base(a.n).names().to_vec();
            put(&mut o, "base_dim", a.n.into());
            put(&mut o, "rank_A", a.r.into());
            put_algebroid(&mut o, a, &names);
        }
        SpecFile::Ha2(h) => {
            let names = Chart::base(h.n).names().to_vec();
            put(&mut o, "base_dim", h.n.into());
            put(&mut o, "rank_A", h.r.into());
            put(&mut o, "rank_C", h.m.into());
            put_algebroid(&mut o, &h.algebroid, &names);
            put(&mut o, "Q_a_ij", h.q_a_ij.to_value(&names));
            put(&mut o, "Q_a_mu", h.q_a_mu.to_value(&names));
            put(&mut o, "Q_mu_i", h.q_mu_i.to_value(&names));
            put(&mut o, "Q_mu_ij", h.q_mu_ij.to_value(&names));
            put(&mut o, "Q_mu_nui", h.q_mu_nui.to_value(&names));
            put(&mut o, "Q_mu_ijk", h.q_mu_ijk.to_value(&names));
        }
        SpecFile::PointHa(p) => {
            put(&mut o, "rank_A", p.r.into());
            put(&mut o, "rank_C", p.m.into());
            put(&mut o, "bracket", p.bracket.to_value(&[]));
            put(&mut o, "partial", p.pa.to_value(&[]));
            put(&mut o, "beta", p.beta.to_value(&[]));
            put(&mut o, "box", p.box_.to_value(&[]));
            put(&mut o, "omega_bar", p.omega_bar.to_value(&[]));
        }
        SpecFile::Ruth2(rep, phi) => {
            let a = &rep.algebroid;
            let names = Chart::base(a.n).names().to_vec();
            put(&mut o, "base_dim", a.n.into());
            put(&mut o, "rank_A", a.r.into());
            put(&mut o, "rank_F0", rep.f0.into());
            put(&mut o, "rank_F1", rep.f1.into());
            put_algebroid(&mut o, a, &names);
            put(&mut o, "partial", rep.partial.to_value(&names));
            put(&mut o, "conn0", rep.conn0.to_value(&names));
            put(&mut o, "conn1", rep.conn1.to_value(&names));
            put(&mut o, "K", rep.k.to_value(&names));
            if let Some(phi) = phi {
                let mut m = Map::new();
                put(&mut m, "Phi0_deg0", phi.phi0_deg0.to_value(&names));
                put(&mut m, "Phi0_deg1", phi.phi0_deg1.to_value(&names));
                put(&mut m, "Phi1", phi.phi1.to_value(&names));
                put(&mut o, "morphism", Value::Object(m));
            }
        }
        SpecFile::Connection(c) => {
            let names = Chart::base(c.n).names().to_vec();
            put(&mut o, "base_dim", c.n.into());
            put(&mut o, "rank_A", c.r.into());
            put(&mut o, "Gamma", c.gamma.to_value(&names));
        }
    }
    Value::Object(o)
}

fn is_flat(items: &[Value]) -> bool {
    items.iter().all(|v| !v.is_array() && !v.is_object())
}

fn emit(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent + 1);
    match v {
        Value::Array(items) if items.is_empty() => out.push_str("[]"),
        Value::Array(items) if is_flat(items) => {
            let parts: Vec<String> = items.iter().map(Value::to_string).collect();
            out.push('[');
            out.push_str(&parts.join(", "));
            out.push(']');
        }
        Value::Array(items) => {
            out.push_str("[\n");
            for (k, item) in items.iter().enumerate() {
                out.push_str(&pad);
                emit(item, indent + 1, out);
                out.push_str(if k + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&"  ".repeat(indent));
            out.push(']');
        }
        Value::Object(map) => {
            out.push_str("{\n");
            for (k, (key, item)) in map.iter().enumerate() {
                out.push_str(&pad);
                out.push_str(&Value::String(key.clone()).to_string());
                out.push_str(": ");
                emit(item, indent + 1, out);
                out.push_str(if k + 1 < map.len() { ",\n" } else { "\n" });
            }
            out.push_str(&"  ".repeat(indent));
            out.push('}');
        }
        scalar => out.push_str(&scalar.to_string()),
    }
}

/// Renders a spec file as text; innermost arrays stay on one line.
pub fn write_spec(spec: &SpecFile) -> String {
    let mut out = String::new();
    emit(&to_value(spec), 0, &mut out);
    out.push('\n');
    out
}
