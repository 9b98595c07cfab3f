use std::ffi::{c_char, CStr, CString};
use std::ptr;

use gsph_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(gsph_last_error()) }.to_str().unwrap().to_owned()
}

fn points(d: *const GsphDiagram) -> Vec<GsphPoint> {
    let n = unsafe { gsph_diagram_len(d) };
    (0..n)
        .map(|i| {
            let mut p = GsphPoint { dim: 0, kind: GsphKind::Ordinary, birth: 0.0, death: 0.0 };
            assert_eq!(unsafe { gsph_diagram_point(d, i, &mut p) }, GsphStatus::Ok);
            p
        })
        .collect()
}

#[test]
fn digraph_round_trip() {
    unsafe {
        let g = gsph_digraph_new();
        for (s, t, w) in [("a", "b", 1.0), ("b", "c", 2.0), ("a", "c", 3.0)] {
            assert_eq!(gsph_digraph_add_edge(g, c(s).as_ptr(), c(t).as_ptr(), w), GsphStatus::Ok);
        }
        assert_eq!(gsph_digraph_add_vertex(g, c("lonely").as_ptr()), GsphStatus::Ok);
        let mut d = ptr::null_mut();
        assert_eq!(gsph_digraph_diagram(g, ptr::null(), &mut d), GsphStatus::Ok);
        assert!(last_error().is_empty());
        let pts = points(d);
        let ext0 = pts.iter().filter(|p| p.dim == 0 && p.kind == GsphKind::Extended).count();
        assert_eq!(ext0, 2);
        gsph_diagram_free(d);
        gsph_digraph_free(g);
    }
}

#[test]
fn errors_set_status_and_message() {
    unsafe {
        let g = gsph_digraph_new();
        assert_eq!(gsph_digraph_add_edge(g, c("a").as_ptr(), c("b").as_ptr(), 1.0), GsphStatus::Ok);
        assert_eq!(
            gsph_digraph_add_edge(g, c("a").as_ptr(), c("b").as_ptr(), 1.0),
            GsphStatus::InvalidArgument
        );
        assert!(!last_error().is_empty());
        assert_eq!(
            gsph_digraph_add_edge(g, ptr::null(), c("b").as_ptr(), 1.0),
            GsphStatus::NullPointer
        );
        assert_eq!(
            gsph_digraph_add_edge(g, c("a").as_ptr(), c("c").as_ptr(), f64::NAN),
            GsphStatus::InvalidArgument
        );
        let bad = [0xffu8, 0];
        assert_eq!(gsph_digraph_add_vertex(g, bad.as_ptr().cast()), GsphStatus::InvalidUtf8);
        let opts = GsphOptions { field: 9, ..gsph_options_default() };
        let mut d = ptr::null_mut();
        assert_eq!(gsph_digraph_diagram(g, &opts, &mut d), GsphStatus::InvalidField);
        assert!(d.is_null());
        assert_eq!(gsph_digraph_diagram(g, ptr::null(), ptr::null_mut()), GsphStatus::NullPointer);
        assert_eq!(gsph_digraph_diagram(ptr::null(), ptr::null(), &mut d), GsphStatus::NullPointer);
        let mut dist = 0.0;
        assert_eq!(gsph_bottleneck(ptr::null(), ptr::null(), 0, &mut dist), GsphStatus::NullPointer);
        assert_eq!(gsph_diagram_parse(c("0\text\t1\t1\n").as_ptr(), &mut d), GsphStatus::ParseError);
        assert!(last_error().starts_with("line 1"));
        gsph_digraph_free(g);
        gsph_digraph_free(ptr::null_mut());
        gsph_diagram_free(ptr::null_mut());
        gsph_string_free(ptr::null_mut());
        assert_eq!(gsph_diagram_len(ptr::null()), 0);
    }
}

#[test]
fn hypergraph_and_distance() {
    unsafe {
        let h = gsph_hypergraph_new();
        let names = [c("a"), c("b"), c("c")];
        let ptrs: Vec<*const c_char> = names.iter().map(|n| n.as_ptr()).collect();
        for k in 0..3 {
            assert_eq!(gsph_hypergraph_add_hyperedge(h, ptrs[k..].as_ptr(), 1, 0.0), GsphStatus::Ok);
        }
        assert_eq!(gsph_hypergraph_add_hyperedge(h, ptrs.as_ptr(), 2, 1.0), GsphStatus::Ok);
        assert_eq!(gsph_hypergraph_add_hyperedge(h, ptrs[1..].as_ptr(), 2, 2.0), GsphStatus::Ok);
        assert_eq!(gsph_hypergraph_add_hyperedge(h, ptrs.as_ptr(), 0, 2.0), GsphStatus::InvalidArgument);
        let mut d = ptr::null_mut();
        assert_eq!(gsph_hypergraph_diagram(h, ptr::null(), &mut d), GsphStatus::Ok);

        let shifted = [GsphPoint { dim: 0, kind: GsphKind::Extended, birth: 0.0, death: 0.0 }];
        let mut e = ptr::null_mut();
        assert_eq!(gsph_diagram_from_points(shifted.as_ptr(), 1, &mut e), GsphStatus::Ok);
        let mut dist = 0.0;
        assert_eq!(gsph_bottleneck(d, e, 0, &mut dist), GsphStatus::Ok);
        let ours = points(d);
        let ext: Vec<&GsphPoint> = ours.iter().filter(|p| p.kind == GsphKind::Extended).collect();
        assert_eq!(ext.len(), 1);
        assert_eq!((ext[0].dim, ext[0].birth, ext[0].death), (0, 0.0, 0.0));
        // Ordinary points (0,1) and (0,2) go to the diagonal.
        assert_eq!(dist, 1.0);
        assert_eq!(gsph_bottleneck(d, e, 1, &mut dist), GsphStatus::Ok);
        assert_eq!(dist, 0.0);
        let mut none = ptr::null_mut();
        assert_eq!(gsph_diagram_from_points(ptr::null(), 0, &mut none), GsphStatus::Ok);
        assert_eq!(gsph_bottleneck(d, none, 0, &mut dist), GsphStatus::Ok);
        assert!(dist.is_infinite());
        gsph_diagram_free(none);
        let mut text = ptr::null_mut();
        assert_eq!(gsph_diagram_format(d, &mut text), GsphStatus::Ok);
        let mut again = ptr::null_mut();
        assert_eq!(gsph_diagram_parse(text, &mut again), GsphStatus::Ok);
        assert_eq!(points(again), ours);
        gsph_string_free(text);
        for x in [d, e, again] {
            gsph_diagram_free(x);
        }
        gsph_hypergraph_free(h);
    }
}

#[test]
fn version_is_the_crate_version() {
    let v = unsafe { CStr::from_ptr(gsph_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}
