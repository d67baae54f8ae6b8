// Every example program must run to completion.

#[allow(dead_code)]
#[path = "../examples/field_arithmetic.rs"]
mod field_arithmetic;

#[test]
fn field_arithmetic() {
    field_arithmetic::run_example().unwrap();
}

#[allow(dead_code)]
#[path = "../examples/subspace_metric.rs"]
mod subspace_metric;

#[test]
fn subspace_metric() {
    subspace_metric::run_example().unwrap();
}

#[allow(dead_code)]
#[path = "../examples/gaussian_bounds.rs"]
mod gaussian_bounds;

#[test]
fn gaussian_bounds() {
    gaussian_bounds::run_example().unwrap();
}

#[allow(dead_code)]
#[path = "../examples/enumerate_grassmannian.rs"]
mod enumerate_grassmannian;

#[test]
fn enumerate_grassmannian() {
    enumerate_grassmannian::run_example().unwrap();
}

#[allow(dead_code)]
#[path = "../examples/constructions.rs"]
mod constructions;

#[test]
fn constructions() {
    constructions::run_example().unwrap();
}

#[allow(dead_code)]
#[path = "../examples/admissibility.rs"]
mod admissibility;

#[test]
fn admissibility() {
    admissibility::run_example().unwrap();
}

#[allow(dead_code)]
#[path = "../examples/oracle_max.rs"]
mod oracle_max;

#[test]
fn oracle_max() {
    oracle_max::run_example().unwrap();
}

#[allow(dead_code)]
#[path = "../examples/oracle_admissible.rs"]
mod oracle_admissible;

#[test]
fn oracle_admissible() {
    oracle_admissible::run_example().unwrap();
}

#[allow(dead_code)]
#[path = "../examples/sweeps.rs"]
mod sweeps;

#[test]
fn sweeps() {
    sweeps::run_example().unwrap();
}

#[allow(dead_code)]
#[path = "../examples/family_files.rs"]
mod family_files;

#[test]
fn family_files() {
    family_files::run_example().unwrap();
}

#[allow(dead_code)]
#[path = "../examples/cli_usage.rs"]
mod cli_usage;

#[test]
fn cli_usage() {
    cli_usage::run_example().unwrap();
}
