// Each example exposes run_example(); running them here keeps them honest.

#[allow(dead_code)]
mod cohomology_tables {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/cohomology_tables.rs"
    ));
}

#[test]
fn cohomology_tables_runs() {
    cohomology_tables::run_example().expect("cohomology_tables example should run");
}

#[allow(dead_code)]
mod regularity_set {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/regularity_set.rs"
    ));
}

#[test]
fn regularity_set_runs() {
    regularity_set::run_example().expect("regularity_set example should run");
}

#[allow(dead_code)]
mod cm_regularity {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/cm_regularity.rs"
    ));
}

#[test]
fn cm_regularity_runs() {
    cm_regularity::run_example().expect("cm_regularity example should run");
}

#[allow(dead_code)]
mod subadditivity {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/subadditivity.rs"
    ));
}

#[test]
fn subadditivity_runs() {
    subadditivity::run_example().expect("subadditivity example should run");
}

#[allow(dead_code)]
mod tate_window {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/tate_window.rs"
    ));
}

#[test]
fn tate_window_runs() {
    tate_window::run_example().expect("tate_window example should run");
}

#[allow(dead_code)]
mod verify_grid {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/verify_grid.rs"
    ));
}

#[test]
fn verify_grid_runs() {
    verify_grid::run_example().expect("verify_grid example should run");
}
