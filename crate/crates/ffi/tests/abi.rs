//! Drives the C surface the way a foreign caller would: everything through
//! raw pointers and the exported functions, nothing through the Rust API.

use ramsey_forge_ffi::*;
use std::ffi::{c_char, CStr, CString};
use std::ptr;

fn parse(text: &str) -> *mut RfGraph {
    let c = CString::new(text).unwrap();
    let mut out: *mut RfGraph = ptr::null_mut();
    let status = unsafe { rf_graph_parse(c.as_ptr(), &mut out) };
    assert_eq!(status, RfStatus::Ok, "parse {text:?}");
    assert!(!out.is_null());
    out
}

fn take_string(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let text = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { rf_string_free(s) };
    text
}

fn json(status: RfStatus, out: *mut c_char) -> serde_json::Value {
    assert_eq!(status, RfStatus::Ok);
    serde_json::from_str(&take_string(out)).unwrap()
}

#[test]
fn graphs_round_trip_and_report_sizes() {
    let g = parse("Dhc"); // the 5-cycle
    let mut n = 0u32;
    let mut e = 0u32;
    unsafe {
        assert_eq!(rf_graph_order(g, &mut n), RfStatus::Ok);
        assert_eq!(rf_graph_edge_count(g, &mut e), RfStatus::Ok);
    }
    assert_eq!((n, e), (5, 5));

    let mut text: *mut c_char = ptr::null_mut();
    unsafe {
        assert_eq!(rf_graph_write_g6(g, &mut text), RfStatus::Ok);
    }
    assert_eq!(take_string(text), "Dhc");

    let mut comp: *mut RfGraph = ptr::null_mut();
    unsafe {
        assert_eq!(rf_graph_complement(g, &mut comp), RfStatus::Ok);
        assert_eq!(rf_graph_edge_count(comp, &mut e), RfStatus::Ok);
        rf_graph_free(comp);
        rf_graph_free(g);
    }
    assert_eq!(e, 5); // the 5-cycle is self-complementary
}

#[test]
fn edge_list_text_parses_too() {
    let g = parse("# triangle\n0 1\n1 2\n0 2\n");
    let mut e = 0u32;
    unsafe {
        assert_eq!(rf_graph_edge_count(g, &mut e), RfStatus::Ok);
        rf_graph_free(g);
    }
    assert_eq!(e, 3);
}

#[test]
fn objective_document_matches_the_known_values() {
    let k3 = parse("Bw");
    let c5 = parse("Dhc");
    let mut out: *mut c_char = ptr::null_mut();
    let status = unsafe { rf_objective_json(k3, k3, c5, &mut out) };
    let doc = json(status, out);
    assert_eq!(doc["schema"], "ramsey-forge/objective/1");
    assert_eq!(doc["report"]["value"], "0/1");
    assert_eq!(doc["context"]["rho1"], "4");
    unsafe {
        rf_graph_free(k3);
        rf_graph_free(c5);
    }
}

#[test]
fn search_document_and_budget_status() {
    let k3 = parse("Bw");
    let mut out: *mut c_char = ptr::null_mut();
    let status = unsafe {
        rf_search_json(k3, k3, 5, RfSearchMode::Exhaustive, 0, 7, 1, &mut out)
    };
    let doc = json(status, out);
    assert_eq!(doc["report"]["min_value"], "0/1");
    assert_eq!(doc["report"]["turan_verdict"], "contains-non-turan");
    assert_eq!(doc["report"]["minimizers"][0], "DLo");

    let mut out: *mut c_char = ptr::null_mut();
    let status = unsafe {
        rf_search_json(k3, k3, 12, RfSearchMode::Exhaustive, 0, 7, 1, &mut out)
    };
    assert_eq!(status, RfStatus::BudgetExceeded);
    assert!(out.is_null());
    unsafe { rf_graph_free(k3) };
}

#[test]
fn local_search_is_deterministic_across_workers() {
    let k3 = parse("Bw");
    let mut texts = Vec::new();
    for jobs in [1u32, 3, 1] {
        let mut out: *mut c_char = ptr::null_mut();
        let status = unsafe {
            rf_search_json(k3, k3, 7, RfSearchMode::Local, 42, 7, jobs, &mut out)
        };
        assert_eq!(status, RfStatus::Ok);
        texts.push(take_string(out));
    }
    assert_eq!(texts[0], texts[1]);
    assert_eq!(texts[0], texts[2]);
    unsafe { rf_graph_free(k3) };
}

#[test]
fn perturb_document_reports_the_verdict() {
    let hairy = parse("0 1\n0 2\n1 2\n0 3\n"); // triangle plus one pendant
    let k3 = parse("Bw");
    let mut out: *mut c_char = ptr::null_mut();
    let grid = CString::new("0,1/100,1/50").unwrap();
    let status = unsafe { rf_perturb_json(hairy, k3, 12, grid.as_ptr(), 1, &mut out) };
    let doc = json(status, out);
    assert_eq!(doc["report"]["verdict"], "not-multiplicity-good");
    assert_eq!(doc["report"]["linear_coefficient"], "-1/1");
    assert_eq!(doc["config"]["grid"][2], "1/50");

    // default grid via null pointer
    let mut out: *mut c_char = ptr::null_mut();
    let status = unsafe { rf_perturb_json(hairy, k3, 12, ptr::null(), 1, &mut out) };
    let doc = json(status, out);
    assert_eq!(doc["config"]["grid"].as_array().unwrap().len(), 11);
    unsafe {
        rf_graph_free(hairy);
        rf_graph_free(k3);
    }
}

#[test]
fn bounds_document_flags_the_pentagon() {
    let c5 = parse("Dhc");
    let mut out: *mut c_char = ptr::null_mut();
    let status = unsafe { rf_bounds_json(c5, &mut out) };
    let doc = json(status, out);
    assert_eq!(doc["report"]["proper_colourings_at_chi"], "30");
    assert_eq!(doc["report"]["tomescu_bound"], "24");
    assert_eq!(doc["report"]["tomescu_exceeded"], true);
    assert_eq!(doc["report"]["nearly_proper_count"], "10");
    unsafe { rf_graph_free(c5) };
}

#[test]
fn status_codes_cover_the_failure_modes() {
    let mut g: *mut RfGraph = ptr::null_mut();
    let bad = CString::new("!!not a graph!!").unwrap();
    assert_eq!(
        unsafe { rf_graph_parse(bad.as_ptr(), &mut g) },
        RfStatus::ParseError
    );
    assert!(g.is_null());
    assert_eq!(
        unsafe { rf_graph_parse(ptr::null(), &mut g) },
        RfStatus::NullArgument
    );

    let k3 = parse("Bw");
    let k2 = parse("A_");
    let edgeless = parse("A?");
    let mut out: *mut c_char = ptr::null_mut();

    // edgeless pattern
    assert_eq!(
        unsafe { rf_objective_json(edgeless, k3, k3, &mut out) },
        RfStatus::InvalidArgument
    );
    // host smaller than the patterns
    assert_eq!(
        unsafe { rf_objective_json(k3, k3, k2, &mut out) },
        RfStatus::SizeError
    );
    // bipartite second pattern cannot drive the deletion construction
    assert_eq!(
        unsafe { rf_perturb_json(k3, k2, 10, ptr::null(), 1, &mut out) },
        RfStatus::InvalidArgument
    );
    // malformed and out-of-range grids
    let bad_grid = CString::new("0,zebra").unwrap();
    assert_eq!(
        unsafe { rf_perturb_json(k3, k3, 8, bad_grid.as_ptr(), 1, &mut out) },
        RfStatus::ParseError
    );
    let big_grid = CString::new("3/2").unwrap();
    assert_eq!(
        unsafe { rf_perturb_json(k3, k3, 8, big_grid.as_ptr(), 1, &mut out) },
        RfStatus::InvalidArgument
    );
    // null handles
    assert_eq!(
        unsafe { rf_bounds_json(ptr::null(), &mut out) },
        RfStatus::NullArgument
    );
    assert!(out.is_null());

    unsafe {
        rf_graph_free(k3);
        rf_graph_free(k2);
        rf_graph_free(edgeless);
        rf_graph_free(ptr::null_mut()); // explicitly allowed
        rf_string_free(ptr::null_mut());
    }
}
