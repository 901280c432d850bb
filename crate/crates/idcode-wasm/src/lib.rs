//! Browser bindings for the identifying-code library: JSON strings in and
//! out, so the demo page needs no generated TypeScript glue. Three entry
//! points: analyze a hand-built code, construct a sum code, and search for
//! a minimum identifying code.

use idcode::algebra;
use idcode::codesets::{self, Code};
use idcode::constructions;
use idcode::hamming::Radices;
use idcode::search::{min_identifying_code, SearchOptions};
use serde::Serialize;
use wasm_bindgen::prelude::*;

#[derive(Serialize)]
struct CheckOutcome {
    name: &'static str,
    pass: bool,
    /// Human-readable reason when the check fails.
    witness: Option<String>,
}

#[derive(Serialize)]
struct Analysis {
    radices: Vec<u32>,
    members: Vec<usize>,
    /// For every vertex index, the indices of codewords in its closed
    /// neighborhood.
    jsets: Vec<Vec<usize>>,
    checks: Vec<CheckOutcome>,
}

#[derive(Serialize)]
struct CodeOut {
    radices: Vec<u32>,
    members: Vec<usize>,
}

#[derive(Serialize)]
struct SearchOut {
    radices: Vec<u32>,
    optimum: usize,
    members: Vec<usize>,
    explored: u64,
}

fn error_json(msg: impl std::fmt::Display) -> String {
    serde_json::json!({ "error": msg.to_string() }).to_string()
}

fn ok_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("report types serialize cleanly")
}

fn parse_radices(json: &str) -> Result<Radices, String> {
    let dims: Vec<u32> = serde_json::from_str(json).map_err(|e| format!("radices: {e}"))?;
    Radices::new(dims).map_err(|e| e.to_string())
}

fn parse_code(radices_json: &str, members_json: &str) -> Result<Code, String> {
    let r = parse_radices(radices_json)?;
    let members: Vec<usize> =
        serde_json::from_str(members_json).map_err(|e| format!("members: {e}"))?;
    Code::from_indices(r, members).map_err(|e| e.to_string())
}

fn code_out(code: &Code) -> CodeOut {
    CodeOut {
        radices: code.radices().dims().to_vec(),
        members: code.indices().collect(),
    }
}

fn check_outcomes(code: &Code) -> Vec<CheckOutcome> {
    let mut checks = Vec::new();

    let undominated = codesets::find_undominated(code);
    checks.push(CheckOutcome {
        name: "dominating",
        pass: undominated.is_none(),
        witness: undominated.map(|x| format!("{x} has no codeword in N[{x}]")),
    });

    let unseparated = codesets::find_unseparated_pair(code);
    checks.push(CheckOutcome {
        name: "separating",
        pass: unseparated.is_none(),
        witness: unseparated.map(|(x, y)| format!("J({x}) = J({y})")),
    });

    checks.push(CheckOutcome {
        name: "identifying",
        pass: codesets::is_identifying(code),
        witness: None,
    });

    let group_witness = if code.is_empty() {
        Some("the code is empty".to_string())
    } else if !code.contains_index(0) {
        Some("the zero word is missing".to_string())
    } else {
        algebra::find_closure_violation(code)
            .map(|(b, a, sum)| format!("{b} + {a} = {sum} is not in the code"))
    };
    checks.push(CheckOutcome {
        name: "group",
        pass: group_witness.is_none(),
        witness: group_witness,
    });

    checks
}

/// Full report on a code given as JSON arrays, e.g. `analyze("[3,3]",
/// "[0,1,3,5]")`. Returns `{radices, members, jsets, checks}` or
/// `{error}`.
#[wasm_bindgen]
pub fn analyze(radices: &str, members: &str) -> String {
    let code = match parse_code(radices, members) {
        Ok(code) => code,
        Err(msg) => return error_json(msg),
    };
    let r = code.radices();
    let jsets: Vec<Vec<usize>> = (0..r.vertex_count())
        .map(|idx| {
            let v = r.index_vertex(idx).expect("index in range");
            codesets::j_set(&code, &v)
                .expect("vertex belongs to the graph")
                .members()
                .iter()
                .map(|m| r.vertex_index(m).expect("member in range"))
                .collect()
        })
        .collect();
    ok_json(&Analysis {
        radices: r.dims().to_vec(),
        members: code.indices().collect(),
        jsets,
        checks: check_outcomes(&code),
    })
}

/// The code whose last coordinate is the sum of the others mod m, as
/// `{radices, members}` or `{error}`.
#[wasm_bindgen]
pub fn construct_sum(m: u32, n: usize) -> String {
    match constructions::sum_code(m, n) {
        Ok(code) => ok_json(&code_out(&code)),
        Err(e) => error_json(e),
    }
}

/// Minimum identifying code for the given radices, as `{radices, optimum,
/// members, explored}` or `{error}`.
#[wasm_bindgen]
pub fn search_min(radices: &str) -> String {
    let r = match parse_radices(radices) {
        Ok(r) => r,
        Err(msg) => return error_json(msg),
    };
    match min_identifying_code(&r, &SearchOptions::default()) {
        Ok(report) => ok_json(&SearchOut {
            radices: r.dims().to_vec(),
            optimum: report.optimum,
            members: report.witness.indices().collect(),
            explored: report.explored,
        }),
        Err(e) => error_json(e),
    }
}
