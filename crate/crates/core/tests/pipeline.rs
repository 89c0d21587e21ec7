//! End-to-end use of the public API: text in, reconfiguration graphs and
//! reconstructions out.

use cliquereconf_core::analysis::{verify_theorem, Theorem};
use cliquereconf_core::clique::clique_number;
use cliquereconf_core::corpus::{generate_corpus, CorpusFamily};
use cliquereconf_core::io::{parse_edge_list, write_dot, write_edge_list};
use cliquereconf_core::iso::{are_isomorphic, is_isomorphic};
use cliquereconf_core::metric::is_bipartite;
use cliquereconf_core::reconf::{build_simplex, build_tj, build_ts, ReconfGraphJson};
use cliquereconf_core::reconstruct::{join_lift, reconstruct_ts, verify_reconstruction};
use cliquereconf_core::{Graph, Rule};

const DIAMOND: &str = "# K4 minus the edge a-d\na b\na c\nb c\nb d\nc d\n";

#[test]
fn text_to_ts_to_text() {
    let g = parse_edge_list(DIAMOND).unwrap();
    let ts = build_ts(&g, 2).unwrap();
    let names: Vec<String> = ts.labels().iter().map(|c| c.display(&g)).collect();
    assert_eq!(names, ["{a,b}", "{a,c}", "{b,c}", "{b,d}", "{c,d}"]);

    let text = write_edge_list(ts.graph());
    let back = parse_edge_list(&text).unwrap();
    assert_eq!(back, *ts.graph());
    assert!(write_dot(ts.graph()).contains("label=\"{b,c}\""));
}

#[test]
fn json_export_round_trips_through_serde() {
    let g = parse_edge_list(DIAMOND).unwrap();
    let tj = build_tj(&g, 3).unwrap();
    let text = serde_json::to_string(&tj.to_json()).unwrap();
    let back: ReconfGraphJson = serde_json::from_str(&text).unwrap();
    assert_eq!(back, tj.to_json());
    assert_eq!(back.rule, Rule::TokenJumping);
    assert_eq!(back.nodes, vec![vec!["a", "b", "c"], vec!["b", "c", "d"]]);
    assert_eq!(back.edges, vec![[0, 1]]);
}

#[test]
fn reconstruction_from_an_unlabeled_file() {
    // TJ_3 of the diamond, written with arbitrary names.
    let t = parse_edge_list("left right\n").unwrap();
    let h = reconstruct_ts(&t, 3).unwrap();
    let diamond = parse_edge_list(DIAMOND).unwrap();
    let witness = is_isomorphic(&h, build_ts(&diamond, 2).unwrap().graph()).unwrap();
    assert!(witness.verify(&h, build_ts(&diamond, 2).unwrap().graph()));
}

#[test]
fn reconstruction_survives_join_lift() {
    for g in generate_corpus(CorpusFamily::RandomGnp, 6, 20, 3).unwrap() {
        let omega = clique_number(&g);
        if omega < 2 {
            continue;
        }
        let lifted = join_lift(&g, omega + 2).unwrap();
        let r = verify_reconstruction(&lifted).unwrap();
        assert!(r.pass, "{}", r.to_json());
        assert!(are_isomorphic(
            build_tj(&lifted, omega + 2).unwrap().graph(),
            build_tj(&g, omega).unwrap().graph()
        ));
    }
}

#[test]
fn simplex_of_triangle_is_a_cube() {
    let s = build_simplex(&Graph::complete(3));
    assert!(is_bipartite(s.graph()));
    assert!(are_isomorphic(s.graph(), &cliquereconf_core::families::hypercube(3)));
}

#[test]
fn every_theorem_runs_on_a_planar_corpus() {
    for g in generate_corpus(CorpusFamily::Planar, 9, 15, 11).unwrap() {
        for t in Theorem::ALL {
            let r = verify_theorem(t, &g, None).unwrap();
            assert!(r.pass, "{}", r.to_json());
        }
    }
}
