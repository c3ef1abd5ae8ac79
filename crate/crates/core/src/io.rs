//! JSON interchange.
//!
//! - Rationals: JSON integers, or `"num/den"` strings in lowest terms with a
//!   positive denominator.
//! - Point sets: `[[x, y], ...]`.
//! - Graphs: `{"n": 3, "edges": [[0, 1], [2, 1]]}`, `{"path": "+-"}` or a bare
//!   sign string. Caterpillars may add `"backbone": [...]`.
//! - Embeddings: `{"mapping": [...]}` or a bare array.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::digraph::{caterpillar_decompose, Caterpillar, Digraph, GraphError, OrientedPath};
use crate::geometry::{Point, PointSet};
use crate::reduction::{Certificate, ReductionInstance, ThreePartitionInstance};
use crate::verify::{Embedding, EmbeddingError};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Format(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Embedding(#[from] EmbeddingError),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

fn bad(msg: impl Into<String>) -> IoError {
    IoError::Format(msg.into())
}

pub fn rational_to_json(r: &BigRational) -> Value {
    if r.denom().is_one() {
        if let Some(i) = r.numer().to_i64() {
            return json!(i);
        }
    }
    Value::String(format!("{}/{}", r.numer(), r.denom()))
}

pub fn rational_from_json(v: &Value) -> Result<BigRational, IoError> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(|i| BigRational::from_integer(BigInt::from(i)))
            .ok_or_else(|| bad(format!("{n} is not an integer; write fractions as \"num/den\""))),
        Value::String(s) => {
            let r: BigRational = s.trim().parse().map_err(|_| bad(format!("cannot parse rational `{s}`")))?;
            Ok(r)
        }
        other => Err(bad(format!("expected a number or \"num/den\", got {other}"))),
    }
}

pub fn point_set_to_json(s: &PointSet) -> Value {
    Value::Array(s.points().iter().map(|p| json!([rational_to_json(&p.x), rational_to_json(&p.y)])).collect())
}

pub fn point_set_from_json(v: &Value) -> Result<PointSet, IoError> {
    let arr = v.as_array().ok_or_else(|| bad("a point set is a JSON array of [x, y] pairs"))?;
    arr.iter()
        .enumerate()
        .map(|(i, p)| match p.as_array().map(Vec::as_slice) {
            Some([x, y]) => Ok(Point::new(rational_from_json(x)?, rational_from_json(y)?)),
            _ => Err(bad(format!("point {i} is not an [x, y] pair"))),
        })
        .collect::<Result<Vec<_>, _>>()
        .map(PointSet::new)
}

pub fn graph_to_json(g: &Digraph) -> Value {
    json!({ "n": g.n(), "edges": g.edges().iter().map(|&(u, v)| json!([u, v])).collect::<Vec<_>>() })
}

fn index(v: &Value, what: &str) -> Result<usize, IoError> {
    v.as_u64()
        .and_then(|x| usize::try_from(x).ok())
        .ok_or_else(|| bad(format!("{what} must be a non-negative integer, got {v}")))
}

fn index_list(v: &Value, what: &str) -> Result<Vec<usize>, IoError> {
    v.as_array().ok_or_else(|| bad(format!("{what} must be an array")))?.iter().map(|x| index(x, what)).collect()
}

pub fn graph_from_json(v: &Value) -> Result<Digraph, IoError> {
    match v {
        Value::String(s) => Ok(OrientedPath::from_signs(s)?.to_digraph()),
        Value::Object(o) => {
            if let Some(p) = o.get("path") {
                let s = p.as_str().ok_or_else(|| bad("\"path\" must be a sign string"))?;
                return Ok(OrientedPath::from_signs(s)?.to_digraph());
            }
            let n = index(o.get("n").ok_or_else(|| bad("graph needs \"n\""))?, "n")?;
            let edges = o
                .get("edges")
                .ok_or_else(|| bad("graph needs \"edges\""))?
                .as_array()
                .ok_or_else(|| bad("\"edges\" must be an array"))?
                .iter()
                .map(|e| match e.as_array().map(Vec::as_slice) {
                    Some([a, b]) => Ok((index(a, "edge endpoint")?, index(b, "edge endpoint")?)),
                    _ => Err(bad(format!("edge {e} is not a [u, v] pair"))),
                })
                .collect::<Result<Vec<_>, _>>()?;
            Ok(Digraph::new(n, edges)?)
        }
        other => Err(bad(format!("expected a graph object or sign string, got {other}"))),
    }
}

pub fn path_from_json(v: &Value) -> Result<OrientedPath, IoError> {
    match v {
        Value::String(s) => Ok(OrientedPath::from_signs(s)?),
        Value::Object(o) if o.contains_key("path") => {
            graph_from_json(v).and_then(|g| Ok(OrientedPath::from_digraph(&g)?))
        }
        _ => Ok(OrientedPath::from_digraph(&graph_from_json(v)?)?),
    }
}

/// A caterpillar with the given `"backbone"`, or the canonical decomposition.
pub fn caterpillar_from_json(v: &Value) -> Result<Caterpillar, IoError> {
    let g = graph_from_json(v)?;
    match v.get("backbone") {
        Some(b) => Ok(Caterpillar::from_backbone(g, index_list(b, "backbone vertex")?)?),
        None => Ok(caterpillar_decompose(&g)?),
    }
}

pub fn caterpillar_to_json(c: &Caterpillar) -> Value {
    let mut v = graph_to_json(c.graph());
    v["backbone"] = json!(c.backbone());
    v
}

pub fn embedding_to_json(e: &Embedding) -> Value {
    json!({ "mapping": e.mapping() })
}

/// Parses the mapping only; pair with [`Embedding::for_graph`] to validate.
pub fn mapping_from_json(v: &Value) -> Result<Vec<usize>, IoError> {
    let m = match v {
        Value::Object(o) => o.get("mapping").ok_or_else(|| bad("embedding needs \"mapping\""))?,
        other => other,
    };
    index_list(m, "mapping entry")
}

pub fn instance_from_json(v: &Value, normalize: bool) -> Result<ThreePartitionInstance, IoError> {
    let vals = match v {
        Value::Object(o) => o.get("values").ok_or_else(|| bad("instance needs \"values\""))?,
        other => other,
    };
    let values = vals
        .as_array()
        .ok_or_else(|| bad("\"values\" must be an array"))?
        .iter()
        .map(|x| x.as_u64().ok_or_else(|| bad(format!("value {x} is not a positive integer"))))
        .collect::<Result<Vec<_>, _>>()?;
    let r = if normalize { ThreePartitionInstance::normalized(values) } else { ThreePartitionInstance::new(values) };
    r.map_err(|e| bad(e.to_string()))
}

pub fn partition_to_json(p: &[[usize; 3]]) -> Value {
    json!({ "triples": p })
}

pub fn partition_from_json(v: &Value) -> Result<Vec<[usize; 3]>, IoError> {
    let t = match v {
        Value::Object(o) => o.get("triples").ok_or_else(|| bad("partition needs \"triples\""))?,
        other => other,
    };
    t.as_array()
        .ok_or_else(|| bad("\"triples\" must be an array"))?
        .iter()
        .map(|x| {
            let l = index_list(x, "triple entry")?;
            <[usize; 3]>::try_from(l).map_err(|_| bad(format!("{x} is not a triple")))
        })
        .collect()
}

pub fn certificate_to_json(c: &Certificate) -> Value {
    serde_json::to_value(c).expect("certificate serializes")
}

/// Tree, points, pin, layout and certificate of a reduction instance.
pub fn reduction_to_json(r: &ReductionInstance, cert: &Certificate) -> Value {
    let lay = &r.layout;
    let mut layout = Map::new();
    layout.insert("small_sets".into(), json!(lay.small));
    layout.insert("large_sets".into(), serde_json::to_value(&lay.large).expect("serializes"));
    layout.insert(
        "rays".into(),
        Value::Array(lay.rays.iter().map(|d| json!([rational_to_json(&d.x), rational_to_json(&d.y)])).collect()),
    );
    layout.insert("lambda".into(), rational_to_json(&lay.lambda));
    json!({
        "values": r.instance.values(),
        "params": { "m": r.instance.m(), "b": r.instance.b(), "ell": r.ell, "h": r.h },
        "tree": graph_to_json(&r.tree),
        "points": point_set_to_json(&r.points),
        "pin": { "vertex": r.s, "point": r.p },
        "branches": r.branches,
        "layout": Value::Object(layout),
        "certificate": certificate_to_json(cert),
    })
}

/// Point index groups, one per set.
pub type Groups = Vec<Vec<usize>>;

/// Small and large set membership from a reduction bundle, for rendering.
pub fn layout_groups_from_json(v: &Value) -> Result<(Groups, Groups), IoError> {
    let lay = v.get("layout").ok_or_else(|| bad("bundle needs \"layout\""))?;
    let small = lay
        .get("small_sets")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("layout needs \"small_sets\""))?
        .iter()
        .map(|s| index_list(s, "small set point"))
        .collect::<Result<Vec<_>, _>>()?;
    let large = lay
        .get("large_sets")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("layout needs \"large_sets\""))?
        .iter()
        .map(|l| {
            let mut pts = vec![index(&l["q_prime"], "q_prime")?, index(&l["q"], "q")?];
            pts.extend(index_list(&l["tail"], "tail point")?);
            Ok(pts)
        })
        .collect::<Result<Vec<_>, IoError>>()?;
    Ok((small, large))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::ratio;

    #[test]
    fn rationals_round_trip() {
        for r in [ratio(3, 1), ratio(-7, 4), ratio(6, 8), ratio(0, 5)] {
            assert_eq!(rational_from_json(&rational_to_json(&r)).unwrap(), r);
        }
        assert_eq!(rational_to_json(&ratio(6, 8)), json!("3/4"));
        assert_eq!(rational_to_json(&ratio(-4, 2)), json!(-2));
        assert!(rational_from_json(&json!(1.5)).is_err());
        assert!(rational_from_json(&json!("1/0")).is_err());
    }

    #[test]
    fn graphs_and_paths() {
        let g = graph_from_json(&json!("+-")).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (2, 1)]);
        assert_eq!(graph_from_json(&json!({"path": "+-"})).unwrap(), g);
        assert_eq!(graph_from_json(&graph_to_json(&g)).unwrap(), g);
        assert!(graph_from_json(&json!({"n": 2, "edges": [[0, 5]]})).is_err());
        assert_eq!(path_from_json(&json!({"n": 3, "edges": [[0, 1], [2, 1]]})).unwrap().signs(), "+-");
    }

    #[test]
    fn mappings_and_partitions() {
        assert_eq!(mapping_from_json(&json!({"mapping": [2, 0, 1]})).unwrap(), vec![2, 0, 1]);
        assert_eq!(mapping_from_json(&json!([1, 0])).unwrap(), vec![1, 0]);
        assert!(mapping_from_json(&json!([-1])).is_err());
        let p = vec![[0, 2, 4], [1, 3, 5]];
        assert_eq!(partition_from_json(&partition_to_json(&p)).unwrap(), p);
        assert!(partition_from_json(&json!([[0, 1]])).is_err());
    }

    #[test]
    fn instances() {
        assert_eq!(instance_from_json(&json!({"values": [3, 3, 3]}), false).unwrap().b(), 9);
        assert!(instance_from_json(&json!({"values": [1, 1, 1]}), false).is_err());
        assert_eq!(instance_from_json(&json!([1, 1, 1]), true).unwrap().values(), &[3, 3, 3]);
    }
}
