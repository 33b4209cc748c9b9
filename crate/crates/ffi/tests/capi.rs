use std::ffi::{CStr, CString};
use std::path::Path;
use std::process::Command;
use std::ptr;

use chorn_ffi::*;

fn graph(spec: &str) -> *mut ChornGraph {
    let spec = CString::new(spec).unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { chorn_graph_parse(spec.as_ptr(), &mut g) }, ChornStatus::Ok);
    g
}

fn take(s: *mut std::ffi::c_char) -> String {
    let text = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { chorn_string_free(s) };
    text
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(chorn_last_error_message()) }.to_str().unwrap().to_owned()
}

#[test]
fn inverse_coefficient_of_the_four_cycle() {
    let g = graph("C:4");
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { chorn_series_power(g, -1, 4, &mut s) }, ChornStatus::Ok);
    let mut out = ptr::null_mut();
    let exps = [1u32, 1, 1, 1];
    assert_eq!(unsafe { chorn_series_coefficient(s, g, exps.as_ptr(), exps.len(), &mut out) }, ChornStatus::Ok);
    assert_eq!(take(out), "14");
    assert_eq!(last_error(), "");
    unsafe {
        chorn_series_free(s);
        chorn_graph_free(g);
    }
}

#[test]
fn peo_and_buffer_sizes() {
    let g = graph("P:5");
    let mut order = [0u32; 5];
    let mut len = 2usize;
    assert_eq!(unsafe { chorn_find_peo(g, order.as_mut_ptr(), &mut len) }, ChornStatus::BufferTooSmall);
    assert_eq!(len, 5);
    assert_eq!(unsafe { chorn_find_peo(g, order.as_mut_ptr(), &mut len) }, ChornStatus::Ok);
    assert_eq!(order, [1, 2, 3, 4, 5]);
    unsafe { chorn_graph_free(g) };

    let c = graph("C:5");
    let mut len = 5usize;
    assert_eq!(unsafe { chorn_find_peo(c, order.as_mut_ptr(), &mut len) }, ChornStatus::Input);
    assert!(last_error().contains("not chordal"));
    unsafe { chorn_graph_free(c) };
}

#[test]
fn chromatic_and_edges() {
    let edges = [1u32, 2, 2, 3, 1, 3];
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { chorn_graph_from_edges(3, edges.as_ptr(), 3, &mut g) }, ChornStatus::Ok);
    assert_eq!(unsafe { chorn_graph_vertex_count(g) }, 3);
    let exps = [1u32, 1, 1];
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { chorn_chromatic_polynomial(g, exps.as_ptr(), 3, &mut out) }, ChornStatus::Ok);
    let v: serde_json::Value = serde_json::from_str(&take(out)).unwrap();
    assert_eq!(v["text"], "q^3 - 3q^2 + 2q");
    unsafe { chorn_graph_free(g) };
}

#[test]
fn horn_verdicts() {
    let g = graph("C:4");
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { chorn_horn_verdict(g, 1, 12, 4, 4, &mut out) }, ChornStatus::Ok);
    let v: serde_json::Value = serde_json::from_str(&take(out)).unwrap();
    assert_eq!(v["status"], "RatioFitFailed");
    assert_eq!(unsafe { chorn_horn_verdict(g, 0, 8, 2, 2, &mut out) }, ChornStatus::InvalidArgument);
    unsafe { chorn_graph_free(g) };
}

#[test]
fn windows_and_errors() {
    let spec = CString::new("Pinf").unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { chorn_graph_parse(spec.as_ptr(), &mut g) }, ChornStatus::InvalidArgument);
    let window = [1u32, 2, 4];
    assert_eq!(unsafe { chorn_graph_parse_window(spec.as_ptr(), window.as_ptr(), 3, &mut g) }, ChornStatus::Ok);
    assert_eq!(unsafe { chorn_graph_vertex_count(g) }, 3);
    unsafe { chorn_graph_free(g) };

    let bad = CString::new("Q:3").unwrap();
    assert_eq!(unsafe { chorn_graph_parse(bad.as_ptr(), &mut g) }, ChornStatus::Parse);
    assert_eq!(unsafe { chorn_graph_parse(ptr::null(), &mut g) }, ChornStatus::InvalidArgument);
    assert!(last_error().contains("null"));

    let k = graph("K:40");
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { chorn_series_power(k, -1, 3, &mut s) }, ChornStatus::Ok);
    let mut out = ptr::null_mut();
    let exps = [5u32];
    assert_eq!(unsafe { chorn_series_coefficient(s, k, exps.as_ptr(), 1, &mut out) }, ChornStatus::ResourceLimit);
    unsafe {
        chorn_series_free(s);
        chorn_graph_free(k);
        chorn_graph_free(ptr::null_mut());
        chorn_string_free(ptr::null_mut());
    }
}

#[test]
fn header_compiles_as_c_and_cpp() {
    let header = Path::new(env!("CARGO_MANIFEST_DIR")).join("include/chorn.h");
    let text = std::fs::read_to_string(&header).unwrap();
    for name in ["chorn_last_error_message", "chorn_string_free", "chorn_graph_free", "CHORN_STATUS_RESOURCE_LIMIT"] {
        assert!(text.contains(name), "{name} missing from the header");
    }
    let dir = std::env::temp_dir().join(format!("chorn-ffi-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let probe = dir.join("probe.c");
    std::fs::write(
        &probe,
        "#include \"chorn.h\"\nint main(void) { ChornGraph *g = 0; return chorn_graph_parse(\"P:3\", &g) == CHORN_STATUS_OK ? 0 : 1; }\n",
    )
    .unwrap();
    let include = header.parent().unwrap();
    for (compiler, lang) in [("cc", "c"), ("c++", "c++")] {
        let Ok(status) = Command::new(compiler).args(["-fsyntax-only", "-Wall", "-Werror", "-x", lang, "-I"]).arg(include).arg(&probe).status()
        else {
            eprintln!("{compiler} not available; skipping");
            continue;
        };
        assert!(status.success(), "{compiler} rejected the header");
    }
    std::fs::remove_dir_all(&dir).ok();
}
