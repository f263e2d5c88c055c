//! Every example must keep running.

mod add_flexible_atom {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/add_flexible_atom.rs"
    ));
}

mod analyze_flexible {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/analyze_flexible.rs"
    ));
}

mod atom_csp_reduction {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/atom_csp_reduction.rs"
    ));
}

mod behaviours_siggers {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/behaviours_siggers.rs"
    ));
}

mod classify_catalog {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/classify_catalog.rs"
    ));
}

mod generate_instances {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/generate_instances.rs"
    ));
}

mod integralize {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/integralize.rs"
    ));
}

mod path_consistency {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/path_consistency.rs"
    ));
}

mod red_edges {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/red_edges.rs"
    ));
}

mod solve_network {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/solve_network.rs"
    ));
}

mod validate_algebra {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/validate_algebra.rs"
    ));
}

#[test]
fn add_flexible_atom_runs() {
    add_flexible_atom::run_example().expect("add_flexible_atom example should run");
}

#[test]
fn analyze_flexible_runs() {
    analyze_flexible::run_example().expect("analyze_flexible example should run");
}

#[test]
fn atom_csp_reduction_runs() {
    atom_csp_reduction::run_example().expect("atom_csp_reduction example should run");
}

#[test]
fn behaviours_siggers_runs() {
    behaviours_siggers::run_example().expect("behaviours_siggers example should run");
}

#[test]
fn classify_catalog_runs() {
    classify_catalog::run_example().expect("classify_catalog example should run");
}

#[test]
fn generate_instances_runs() {
    generate_instances::run_example().expect("generate_instances example should run");
}

#[test]
fn integralize_runs() {
    integralize::run_example().expect("integralize example should run");
}

#[test]
fn path_consistency_runs() {
    path_consistency::run_example().expect("path_consistency example should run");
}

#[test]
fn red_edges_runs() {
    red_edges::run_example().expect("red_edges example should run");
}

#[test]
fn solve_network_runs() {
    solve_network::run_example().expect("solve_network example should run");
}

#[test]
fn validate_algebra_runs() {
    validate_algebra::run_example().expect("validate_algebra example should run");
}
