//! Three browser operations: the cube explorer, small-n clique
//! verification and isotypic decomposition of a pasted family.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use twocoset::boolfn::{cube_degree, degree2_sensitivity_scan, sensitivity_at, BooleanFunction, CubeFunction};
use twocoset::clique::{build_graph, verify_uniqueness};
use twocoset::domains::{ElementRepr, FamilyFile};
use twocoset::repr::{isotypic_decomposition, PROJECTION_LIMIT};
use twocoset::{Error, Kind};

/// Largest `n` the page will verify; n = 7 is left to the CLI.
pub const WEB_MAX_N: usize = 6;

fn parse_kind(kind: &str) -> Result<Kind, Error> {
    kind.parse()
}

pub fn cube_report(k: usize, table: u64) -> Result<Value, Error> {
    let g = CubeFunction::new(k, table)?;
    let points: Vec<Value> = (0..1u64 << k)
        .map(|p| Ok(json!({"point": p, "value": g.value(p), "sensitivity": sensitivity_at(&g, p)?})))
        .collect::<Result<_, Error>>()?;
    Ok(json!({
        "arity": k,
        "table": table,
        "degree": cube_degree(&g),
        "coefficients": g.multilinear_coefficients(),
        "points": points,
    }))
}

pub fn scan_report(k: usize, s: usize) -> Result<Value, Error> {
    let found = degree2_sensitivity_scan(k, s)?;
    Ok(match found {
        Some(g) => json!({"result": "witness", "table": g.table()}),
        None => json!({"result": "none"}),
    })
}

pub fn clique_report(kind: &str, n: usize) -> Result<Value, Error> {
    if n > WEB_MAX_N {
        return Err(Error::Capacity(format!("the page verifies n <= {WEB_MAX_N}")));
    }
    let kind = parse_kind(kind)?;
    let report = verify_uniqueness(kind, n)?;
    let graph = build_graph(kind, n, 2, None)?;
    let families: Vec<Vec<ElementRepr>> = report
        .report
        .cliques
        .iter()
        .flatten()
        .map(|c| graph.members(c).iter().map(ElementRepr::of).collect())
        .collect();
    Ok(json!({
        "vertices": report.vertices,
        "edges": report.edges,
        "clique_number": report.report.clique_number,
        "count": report.report.maximum_clique_count,
        "passed": report.passed,
        "failure": report.failure,
        "cliques": families,
    }))
}

pub fn isotypic_report(family_json: &str) -> Result<Value, Error> {
    let family = FamilyFile::parse(family_json)?;
    let domain = family.domain()?;
    if domain.size() as usize > PROJECTION_LIMIT {
        return Err(Error::Capacity(format!("{domain} is larger than {PROJECTION_LIMIT} elements")));
    }
    let f = BooleanFunction::indicator(domain, &family.members()?)?;
    let parts = isotypic_decomposition(&f)?;
    let degree = parts.iter().filter(|c| !c.is_zero()).map(|c| domain.n() - c.partition.first()).max().unwrap_or(0);
    Ok(json!({
        "domain": domain.to_string(),
        "weight": f.weight(),
        "spectral_degree": degree,
        "components": parts.iter().map(|c| c.report()).collect::<Vec<_>>(),
    }))
}

fn to_js(r: Result<Value, Error>) -> Result<String, JsError> {
    r.map(|v| v.to_string()).map_err(|e| JsError::new(&e.to_string()))
}

#[wasm_bindgen(js_name = cubeExplore)]
pub fn cube_explore(k: usize, table: f64) -> Result<String, JsError> {
    to_js(cube_report(k, table as u64))
}

#[wasm_bindgen(js_name = sensScan)]
pub fn sens_scan(k: usize, s: usize) -> Result<String, JsError> {
    to_js(scan_report(k, s))
}

#[wasm_bindgen(js_name = verifyCliques)]
pub fn verify_cliques(kind: &str, n: usize) -> Result<String, JsError> {
    to_js(clique_report(kind, n))
}

#[wasm_bindgen]
pub fn isotypic(family_json: &str) -> Result<String, JsError> {
    to_js(isotypic_report(family_json))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn xor_on_two_bits() {
        let r = cube_report(2, 0b0110).unwrap();
        assert_eq!(r["degree"], 2);
        assert_eq!(r["points"][0]["sensitivity"], 2);
        assert_eq!(scan_report(4, 4).unwrap()["result"], "none");
        assert!(cube_report(7, 0).is_err());
    }

    #[test]
    fn cliques() {
        let r = clique_report("pm", 4).unwrap();
        assert_eq!((r["clique_number"].as_u64(), r["count"].as_u64()), (Some(3), Some(6)));
        assert_eq!(r["cliques"].as_array().unwrap().len(), 6);
        assert!(clique_report("pm", 7).is_err());
        assert!(clique_report("xx", 4).is_err());
    }

    #[test]
    fn decomposition() {
        let r = isotypic_report(r#"{"kind":"sym","n":3,"elements":[[1,2,3],[2,1,3]]}"#).unwrap();
        assert_eq!(r["weight"], 2);
        assert_eq!(r["components"].as_array().unwrap().len(), 3);
    }
}
