//! JSON encodings for maps and m-adic numbers.
//!
//! An m-adic number is written either as the compact literal the library
//! renders ("7", "5/3^2", also accepted as "5/9"), or as an object
//! {"n": ..., "s": ...} whose numerator may be a JSON integer or a decimal
//! string (for values beyond 64 bits).
//!
//! A circle map is {"m", "r_src", "r_tgt"?, "pieces"} where pieces list
//! the breakpoint/image nodes of one lift period over [0, r_src] in
//! increasing order; r_tgt defaults to r_src. A segment map is
//! {"m", "pieces"} with the same node format; its domain and codomain are
//! the first and last nodes. Each non-final node may declare "k", the
//! slope exponent of the piece to its right; declared exponents are
//! cross-checked against the geometry on load (all or none). The
//! serializers emit exactly these shapes, so output re-parses to the
//! same map.

use num_bigint::BigInt;
use serde::Deserialize;
use serde_json::{Value, json};

use crate::error::{Error, Result};
use crate::madic::MAdic;
use crate::plmap::{PLCircleMap, PLSegmentMap};

/// Integer literal: a JSON integer, or a decimal string beyond 64 bits.
#[derive(Deserialize)]
#[serde(untagged)]
pub enum IntRepr {
    Small(i64),
    Big(String),
}

impl IntRepr {
    fn to_bigint(&self) -> Result<BigInt> {
        match self {
            IntRepr::Small(v) => Ok(BigInt::from(*v)),
            IntRepr::Big(text) => text
                .trim()
                .parse::<BigInt>()
                .map_err(|_| Error::Parse(format!("invalid integer literal {text:?}"))),
        }
    }
}

/// An m-adic literal: compact text or an explicit numerator/exponent pair.
#[derive(Deserialize)]
#[serde(untagged)]
pub enum MadicRepr {
    Text(String),
    Pair { n: IntRepr, s: u32 },
}

impl MadicRepr {
    pub fn to_madic(&self, m: u32) -> Result<MAdic> {
        match self {
            MadicRepr::Text(text) => MAdic::parse(text, m),
            MadicRepr::Pair { n, s } => {
                Ok(MAdic::normalize(n.to_bigint()?, i64::from(*s), m))
            }
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPiece {
    x: MadicRepr,
    y: MadicRepr,
    #[serde(default)]
    k: Option<i64>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSegmentMap {
    m: u32,
    pieces: Vec<RawPiece>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCircleMap {
    m: u32,
    r_src: MadicRepr,
    #[serde(default)]
    r_tgt: Option<MadicRepr>,
    pieces: Vec<RawPiece>,
}

fn syntax_error(e: &serde_json::Error) -> Error {
    Error::Parse(format!(
        "json syntax at line {}, column {}: {e}",
        e.line(),
        e.column()
    ))
}

fn check_base(m: u32) -> Result<u32> {
    if m < 2 {
        return Err(Error::Parse(format!("base m must be at least 2, got {m}")));
    }
    Ok(m)
}

/// Nodes plus declared slope exponents (None when no piece declares one).
type ParsedPieces = (Vec<(MAdic, MAdic)>, Option<Vec<i64>>);

fn parse_pieces(raw: &[RawPiece], m: u32) -> Result<ParsedPieces> {
    let mut pts = Vec::with_capacity(raw.len());
    for (i, piece) in raw.iter().enumerate() {
        let decorate = |e: Error| match e {
            Error::Parse(msg) => Error::Parse(format!("piece {i}: {msg}")),
            other => other,
        };
        pts.push((
            piece.x.to_madic(m).map_err(decorate)?,
            piece.y.to_madic(m).map_err(decorate)?,
        ));
    }
    if let Some(last) = raw.last()
        && last.k.is_some()
    {
        return Err(Error::Parse(
            "the final node closes the last piece and cannot declare a slope exponent k"
                .into(),
        ));
    }
    let declared: Vec<Option<i64>> = raw
        .iter()
        .take(raw.len().saturating_sub(1))
        .map(|p| p.k)
        .collect();
    let ks = if declared.iter().all(Option::is_none) {
        None
    } else if declared.iter().all(Option::is_some) {
        Some(declared.into_iter().flatten().collect())
    } else {
        return Err(Error::Parse(
            "either every piece declares a slope exponent k or none does".into(),
        ));
    };
    Ok((pts, ks))
}

fn build_segment(m: u32, pts: Vec<(MAdic, MAdic)>, ks: Option<Vec<i64>>) -> Result<PLSegmentMap> {
    match ks {
        Some(declared) => PLSegmentMap::from_nodes_with_slopes(m, pts, &declared),
        None => PLSegmentMap::from_nodes(m, pts),
    }
}

/// Parse a segment map document.
pub fn parse_segment_map(text: &str) -> Result<PLSegmentMap> {
    let raw: RawSegmentMap = serde_json::from_str(text).map_err(|e| syntax_error(&e))?;
    let m = check_base(raw.m)?;
    let (pts, ks) = parse_pieces(&raw.pieces, m)?;
    build_segment(m, pts, ks)
}

/// Parse a circle map document.
pub fn parse_circle_map(text: &str) -> Result<PLCircleMap> {
    let raw: RawCircleMap = serde_json::from_str(text).map_err(|e| syntax_error(&e))?;
    let m = check_base(raw.m)?;
    let r_src = raw.r_src.to_madic(m)?;
    let r_tgt = match &raw.r_tgt {
        Some(repr) => repr.to_madic(m)?,
        None => r_src.clone(),
    };
    let (pts, ks) = parse_pieces(&raw.pieces, m)?;
    let lift = build_segment(m, pts, ks)?;
    PLCircleMap::from_lift(r_src, r_tgt, lift)
}

/// Encode an m-adic number as its compact literal.
pub fn madic_value(x: &MAdic, m: u32) -> Value {
    Value::String(x.render(m))
}

fn pieces_value(f: &PLSegmentMap) -> Vec<Value> {
    let m = f.base();
    let nodes = f.nodes();
    nodes
        .iter()
        .enumerate()
        .map(|(i, nd)| match f.slopes().get(i) {
            Some(k) if i < nodes.len() - 1 => json!({
                "x": madic_value(&nd.x, m),
                "y": madic_value(&nd.y, m),
                "k": k,
            }),
            _ => json!({
                "x": madic_value(&nd.x, m),
                "y": madic_value(&nd.y, m),
            }),
        })
        .collect()
}

/// Encode a segment map; re-parsing yields the same map.
pub fn segment_to_value(f: &PLSegmentMap) -> Value {
    json!({
        "m": f.base(),
        "pieces": pieces_value(f),
    })
}

/// Encode a circle map; re-parsing yields the same map.
pub fn circle_to_value(f: &PLCircleMap) -> Value {
    let m = f.base();
    json!({
        "m": m,
        "r_src": madic_value(f.r_src(), m),
        "r_tgt": madic_value(f.r_tgt(), m),
        "pieces": pieces_value(f.lift()),
    })
}

/// A parsed map document of either kind, as detected from its fields.
pub enum MapDocument {
    Circle(PLCircleMap),
    Segment(PLSegmentMap),
}

/// Parse a map document, detecting circle maps by the presence of "r_src".
pub fn parse_map(text: &str) -> Result<MapDocument> {
    match detect_shape(text)? {
        MapShape::Circle(_) => Ok(MapDocument::Circle(parse_circle_map(text)?)),
        MapShape::Segment(_) => Ok(MapDocument::Segment(parse_segment_map(text)?)),
    }
}

enum MapShape {
    Circle(RawCircleMap),
    Segment(RawSegmentMap),
}

fn detect_shape(text: &str) -> Result<MapShape> {
    let probe: Value = serde_json::from_str(text).map_err(|e| syntax_error(&e))?;
    let is_circle = probe
        .as_object()
        .is_some_and(|obj| obj.contains_key("r_src"));
    if is_circle {
        Ok(MapShape::Circle(
            serde_json::from_value(probe).map_err(|e| syntax_error(&e))?,
        ))
    } else {
        Ok(MapShape::Segment(
            serde_json::from_value(probe).map_err(|e| syntax_error(&e))?,
        ))
    }
}

fn staged_piece_issues(raw: &[RawPiece], m: u32) -> (Vec<(MAdic, MAdic)>, Vec<String>) {
    let mut pts = Vec::with_capacity(raw.len());
    let mut issues = Vec::new();
    for (i, piece) in raw.iter().enumerate() {
        match (piece.x.to_madic(m), piece.y.to_madic(m)) {
            (Ok(x), Ok(y)) => pts.push((x, y)),
            (x, y) => {
                for e in [x.err(), y.err()].into_iter().flatten() {
                    issues.push(format!("piece {i}: {e}"));
                }
            }
        }
    }
    (pts, issues)
}

/// Staged diagnosis of a map document (circle or segment, detected by the
/// presence of "r_src"): all problems found at the first failing stage
/// (syntax, then literals, then geometry). Empty means the document
/// describes a valid map.
pub fn check_map_text(text: &str) -> Vec<String> {
    let shape = match detect_shape(text) {
        Ok(shape) => shape,
        Err(e) => return vec![e.to_string()],
    };
    let (m, raw_pieces, circ) = match &shape {
        MapShape::Circle(raw) => (raw.m, &raw.pieces, Some((&raw.r_src, raw.r_tgt.as_ref()))),
        MapShape::Segment(raw) => (raw.m, &raw.pieces, None),
    };
    if let Err(e) = check_base(m) {
        return vec![e.to_string()];
    }
    let mut issues = Vec::new();
    let mut circles = None;
    if let Some((r_src, r_tgt)) = circ {
        let src = r_src.to_madic(m);
        let tgt = r_tgt.map(|repr| repr.to_madic(m));
        if let Err(e) = &src {
            issues.push(format!("r_src: {e}"));
        }
        if let Some(Err(e)) = &tgt {
            issues.push(format!("r_tgt: {e}"));
        }
        if let (Ok(src), None | Some(Ok(_))) = (&src, &tgt) {
            let tgt = match tgt {
                Some(Ok(v)) => v,
                _ => src.clone(),
            };
            circles = Some((src.clone(), tgt));
        }
    }
    let (pts, mut piece_issues) = staged_piece_issues(raw_pieces, m);
    issues.append(&mut piece_issues);
    if !issues.is_empty() {
        return issues;
    }
    let ks = match parse_pieces(raw_pieces, m) {
        Ok((_, ks)) => ks,
        Err(e) => return vec![e.to_string()],
    };
    let lift = match build_segment(m, pts, ks) {
        Ok(lift) => lift,
        Err(e) => return vec![e.to_string()],
    };
    match (shape, circles) {
        (MapShape::Segment(_), _) => lift.violations(),
        (MapShape::Circle(_), Some((r_src, r_tgt))) => {
            match PLCircleMap::from_lift(r_src, r_tgt, lift) {
                Ok(map) => map.violations(),
                Err(e) => vec![e.to_string()],
            }
        }
        (MapShape::Circle(_), None) => issues,
    }
}
