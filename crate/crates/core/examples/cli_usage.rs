//! Driving the command line entry point in-process.

pub fn run_example() -> qdiam::Result<()> {
    let commands: [&[&str]; 5] = [
        &["bound", "kleitman", "--q", "2", "--n", "5", "--d", "3"],
        &["--format", "json", "bound", "typeA-even", "--q", "2", "--n", "7", "--t", "2"],
        &["enumerate", "--q", "2", "--n", "4", "--k", "2", "--count"],
        &["construct", "ball", "--q", "2", "--n", "4", "--r", "1", "--center", "2:4:1:1000"],
        &["--format", "csv", "sweep", "h-positive", "--qmax", "2", "--nmax", "14", "--t", "2"],
    ];
    for args in commands {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = qdiam::cli::run(std::iter::once("qdiam").chain(args.iter().copied()), &mut out, &mut err);
        println!("$ qdiam {}  (exit {code})", args.join(" "));
        print!("{}{}", String::from_utf8_lossy(&out), String::from_utf8_lossy(&err));
    }
    Ok(())
}

fn main() {
    run_example().unwrap();
}
