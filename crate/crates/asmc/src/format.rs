//! Text and JSON forms of every object the tool passes around.
//!
//! Input kind is detected from content, so commands compose in pipes:
//!
//! | kind          | text                                   | JSON keys               |
//! |---------------|----------------------------------------|-------------------------|
//! | matrix        | `n` lines of `n` integers              | `n`, `rows`             |
//! | tuple         | `k=3 c=1 E=3` then the matrix `P`      | `k`, `P`, `c`, `E`      |
//! | pair          | `E=3` then the matrix `N`              | `N`, `E`                |
//! | table         | `k; a1 ... an; b beta`                 | `k`, `a`, `b`, `beta`   |
//! | configuration | one `(0,i): STEPS` line per path       | `n`, `paths`            |
//!
//! In text, blank lines and `#` comments are ignored.

use std::fmt::{self, Write as _};

use asmc_core::{
    AsmMatrix, DischargeTuple, GenInvTable, MixedConfiguration, MixedPath, NeutralPair, Step,
    Vertex,
};
use serde::{Deserialize, Serialize};
use serde_json::Value;

/// Input that could not be read as any known object.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InputError {
    pub line: Option<usize>,
    pub message: String,
}

impl InputError {
    fn at(line: usize, message: impl Into<String>) -> Self {
        InputError {
            line: Some(line),
            message: message.into(),
        }
    }

    fn plain(message: impl Into<String>) -> Self {
        InputError {
            line: None,
            message: message.into(),
        }
    }
}

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.line {
            Some(l) => write!(f, "MalformedInput: line {l}: {}", self.message),
            None => write!(f, "MalformedInput: {}", self.message),
        }
    }
}

impl std::error::Error for InputError {}

/// Parse failures are either format problems or domain errors raised while
/// building the object (for instance a grid that is not an ASM).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReadError {
    Input(InputError),
    Domain(asmc_core::Error),
}

impl fmt::Display for ReadError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReadError::Input(e) => e.fmt(f),
            ReadError::Domain(e) => e.fmt(f),
        }
    }
}

impl std::error::Error for ReadError {}

impl From<InputError> for ReadError {
    fn from(e: InputError) -> Self {
        ReadError::Input(e)
    }
}

impl From<asmc_core::Error> for ReadError {
    fn from(e: asmc_core::Error) -> Self {
        ReadError::Domain(e)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Object {
    Matrix(AsmMatrix),
    Tuple(DischargeTuple),
    Pair(NeutralPair),
    Table(GenInvTable),
    Config(MixedConfiguration),
}

impl Object {
    pub fn kind(&self) -> &'static str {
        match self {
            Object::Matrix(_) => "matrix",
            Object::Tuple(_) => "discharge tuple",
            Object::Pair(_) => "neutral pair",
            Object::Table(_) => "table",
            Object::Config(_) => "configuration",
        }
    }

    pub fn to_text(&self) -> String {
        match self {
            Object::Matrix(m) => matrix_text(m),
            Object::Tuple(t) => format!("k={} c={} E={}\n{}", t.k, t.c, t.e, matrix_text(&t.p)),
            Object::Pair(p) => format!("E={}\n{}", p.charge(), matrix_text(p.matrix())),
            Object::Table(t) => format!("{t}\n"),
            Object::Config(c) => config_text(c),
        }
    }

    pub fn to_json(&self) -> Value {
        let v = match self {
            Object::Matrix(m) => serde_json::to_value(MatrixJson::from(m)),
            Object::Tuple(t) => serde_json::to_value(TupleJson {
                k: t.k,
                p: MatrixJson::from(&t.p),
                c: t.c,
                e: t.e,
            }),
            Object::Pair(p) => serde_json::to_value(PairJson {
                n: MatrixJson::from(p.matrix()),
                e: p.charge(),
            }),
            Object::Table(t) => serde_json::to_value(TableJson {
                k: t.k,
                a: t.a.clone(),
                b: t.b,
                beta: t.beta,
            }),
            Object::Config(c) => serde_json::to_value(ConfigJson::from(c)),
        };
        v.expect("plain data serializes")
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixJson {
    pub n: usize,
    pub rows: Vec<Vec<i64>>,
}

impl From<&AsmMatrix> for MatrixJson {
    fn from(m: &AsmMatrix) -> Self {
        MatrixJson {
            n: m.order(),
            rows: m.to_rows(),
        }
    }
}

impl MatrixJson {
    fn to_matrix(&self) -> Result<AsmMatrix, ReadError> {
        if self.rows.len() != self.n {
            return Err(InputError::plain(format!(
                "\"n\" is {} but there are {} rows",
                self.n,
                self.rows.len()
            ))
            .into());
        }
        Ok(AsmMatrix::new(&self.rows)?)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TupleJson {
    k: usize,
    #[serde(rename = "P")]
    p: MatrixJson,
    c: usize,
    #[serde(rename = "E")]
    e: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PairJson {
    #[serde(rename = "N")]
    n: MatrixJson,
    #[serde(rename = "E")]
    e: i64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TableJson {
    k: usize,
    a: Vec<usize>,
    b: usize,
    beta: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PathJson {
    start: [i64; 2],
    steps: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConfigJson {
    n: usize,
    paths: Vec<PathJson>,
}

impl From<&MixedConfiguration> for ConfigJson {
    fn from(c: &MixedConfiguration) -> Self {
        let paths = c
            .paths()
            .iter()
            .map(|p| PathJson {
                start: [p.start.x, p.start.level],
                steps: p.step_string(),
            })
            .collect();
        ConfigJson {
            n: c.order(),
            paths,
        }
    }
}

fn parse_steps(s: &str) -> Result<Vec<Step>, String> {
    s.chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| Step::from_letter(c).ok_or_else(|| format!("unknown step letter {c:?}")))
        .collect()
}

pub fn matrix_text(m: &AsmMatrix) -> String {
    m.to_string()
}

pub fn config_text(c: &MixedConfiguration) -> String {
    let mut out = String::new();
    for p in c.paths() {
        let line = format!("({},{}): {}", p.start.x, p.start.level, p.step_string());
        let _ = writeln!(out, "{}", line.trim_end());
    }
    out
}

/// Reads any object, choosing JSON when the input starts with `{`.
pub fn parse_object(input: &str) -> Result<Object, ReadError> {
    if input.trim_start().starts_with('{') {
        parse_json(input)
    } else {
        parse_text(input)
    }
}

fn parse_json(input: &str) -> Result<Object, ReadError> {
    let value: Value =
        serde_json::from_str(input).map_err(|e| InputError::at(e.line(), e.to_string()))?;
    let obj = value
        .as_object()
        .ok_or_else(|| InputError::plain("expected a JSON object"))?;
    let decode = |what: &str, e: serde_json::Error| InputError::plain(format!("{what}: {e}"));
    if obj.contains_key("rows") {
        let m: MatrixJson = serde_json::from_value(value).map_err(|e| decode("matrix", e))?;
        Ok(Object::Matrix(m.to_matrix()?))
    } else if obj.contains_key("P") {
        let t: TupleJson = serde_json::from_value(value).map_err(|e| decode("tuple", e))?;
        Ok(Object::Tuple(DischargeTuple {
            k: t.k,
            p: t.p.to_matrix()?,
            c: t.c,
            e: t.e,
        }))
    } else if obj.contains_key("N") {
        let p: PairJson = serde_json::from_value(value).map_err(|e| decode("pair", e))?;
        Ok(Object::Pair(NeutralPair::new(p.n.to_matrix()?, p.e)?))
    } else if obj.contains_key("beta") {
        let t: TableJson = serde_json::from_value(value).map_err(|e| decode("table", e))?;
        Ok(Object::Table(GenInvTable {
            k: t.k,
            a: t.a,
            b: t.b,
            beta: t.beta,
        }))
    } else if obj.contains_key("paths") {
        let c: ConfigJson =
            serde_json::from_value(value).map_err(|e| decode("configuration", e))?;
        let paths = c
            .paths
            .into_iter()
            .map(|p| {
                let steps = parse_steps(&p.steps).map_err(InputError::plain)?;
                Ok(MixedPath::new(Vertex::new(p.start[0], p.start[1]), steps))
            })
            .collect::<Result<Vec<_>, InputError>>()?;
        Ok(Object::Config(MixedConfiguration::new(c.n, paths)))
    } else {
        Err(InputError::plain("unrecognized JSON object").into())
    }
}

/// Non-empty lines with comments removed, paired with 1-based line numbers.
fn content_lines(input: &str) -> Vec<(usize, &str)> {
    input
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
        .collect()
}

fn parse_text(input: &str) -> Result<Object, ReadError> {
    let lines = content_lines(input);
    let Some(&(first_no, first)) = lines.first() else {
        return Err(InputError::plain("empty input").into());
    };
    if first.starts_with('(') {
        return Ok(Object::Config(parse_config_lines(&lines)?));
    }
    if first.contains(';') {
        if lines.len() > 1 {
            return Err(InputError::at(lines[1].0, "unexpected text after the table").into());
        }
        return Ok(Object::Table(parse_table_line(first_no, first)?));
    }
    if first.contains('=') {
        let fields = parse_fields(first_no, first)?;
        let matrix = parse_matrix_lines(&lines[1..])?;
        let get = |name: &str| {
            fields
                .iter()
                .find(|(k, _)| k == name)
                .map(|&(_, v)| v)
                .ok_or_else(|| InputError::at(first_no, format!("missing field {name}")))
        };
        if fields.iter().any(|(k, _)| k == "k") {
            let unsigned = |name: &str| -> Result<usize, InputError> {
                usize::try_from(get(name)?)
                    .map_err(|_| InputError::at(first_no, format!("{name} must be non-negative")))
            };
            let tuple = DischargeTuple {
                k: unsigned("k")?,
                p: matrix,
                c: unsigned("c")?,
                e: unsigned("E")?,
            };
            return Ok(Object::Tuple(tuple));
        }
        return Ok(Object::Pair(NeutralPair::new(matrix, get("E")?)?));
    }
    Ok(Object::Matrix(parse_matrix_lines(&lines)?))
}

fn parse_int<T: std::str::FromStr>(line: usize, token: &str) -> Result<T, InputError> {
    token
        .parse()
        .map_err(|_| InputError::at(line, format!("expected an integer, found {token:?}")))
}

fn parse_matrix_lines(lines: &[(usize, &str)]) -> Result<AsmMatrix, ReadError> {
    if lines.is_empty() {
        return Err(InputError::plain("missing matrix").into());
    }
    let rows = lines
        .iter()
        .map(|&(no, l)| {
            l.split_whitespace()
                .map(|t| parse_int::<i64>(no, t))
                .collect()
        })
        .collect::<Result<Vec<Vec<i64>>, _>>()?;
    Ok(AsmMatrix::new(&rows)?)
}

/// `name=value` pairs separated by whitespace.
fn parse_fields(line: usize, text: &str) -> Result<Vec<(String, i64)>, InputError> {
    text.split_whitespace()
        .map(|tok| {
            let (k, v) = tok.split_once('=').ok_or_else(|| {
                InputError::at(line, format!("expected name=value, found {tok:?}"))
            })?;
            Ok((k.to_string(), parse_int(line, v)?))
        })
        .collect()
}

fn parse_table_line(line: usize, text: &str) -> Result<GenInvTable, InputError> {
    let parts: Vec<&str> = text.split(';').map(str::trim).collect();
    let [k, a, rest] = parts[..] else {
        return Err(InputError::at(line, "a table reads `k; a1 ... an; b beta`"));
    };
    let a = a
        .split_whitespace()
        .map(|t| parse_int(line, t))
        .collect::<Result<Vec<usize>, _>>()?;
    let rest = rest
        .split_whitespace()
        .map(|t| parse_int(line, t))
        .collect::<Result<Vec<usize>, _>>()?;
    let [b, beta] = rest[..] else {
        return Err(InputError::at(
            line,
            "expected `b beta` after the second semicolon",
        ));
    };
    Ok(GenInvTable {
        k: parse_int(line, k)?,
        a,
        b,
        beta,
    })
}

fn parse_config_lines(lines: &[(usize, &str)]) -> Result<MixedConfiguration, InputError> {
    let paths = lines
        .iter()
        .map(|&(no, l)| {
            let bad = || InputError::at(no, "a path reads `(x,level): STEPS`");
            let (start, steps) = l.split_once(':').ok_or_else(bad)?;
            let coords = start
                .trim()
                .strip_prefix('(')
                .and_then(|s| s.strip_suffix(')'))
                .ok_or_else(bad)?;
            let (x, level) = coords.split_once(',').ok_or_else(bad)?;
            let steps = parse_steps(steps).map_err(|m| InputError::at(no, m))?;
            Ok(MixedPath::new(
                Vertex::new(parse_int(no, x.trim())?, parse_int(no, level.trim())?),
                steps,
            ))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(MixedConfiguration::new(paths.len(), paths))
}
