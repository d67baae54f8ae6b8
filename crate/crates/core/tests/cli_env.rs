// Kept in its own test binary: it mutates the process environment.

use qdiam::cli::{run, EXIT_OK, EXIT_RESOURCE};

fn code(args: &[&str]) -> i32 {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    run(std::iter::once("qdiam").chain(args.iter().copied()), &mut out, &mut err)
}

#[test]
fn flags_override_environment() {
    let max = ["oracle", "max", "--q", "2", "--n", "4", "--d", "2"];
    std::env::set_var("QDIAM_MAX_LATTICE", "10");
    assert_eq!(code(&max), EXIT_RESOURCE);
    let mut with_flag = vec!["--max-lattice", "100"];
    with_flag.extend(max);
    assert_eq!(code(&with_flag), EXIT_OK);
    std::env::remove_var("QDIAM_MAX_LATTICE");
    assert_eq!(code(&max), EXIT_OK);

    std::env::set_var("QDIAM_TIMEOUT_SECS", "0");
    assert_eq!(code(&["oracle", "max", "--q", "2", "--n", "5", "--d", "3", "--all"]), EXIT_RESOURCE);
    std::env::remove_var("QDIAM_TIMEOUT_SECS");
}
