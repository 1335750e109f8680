//! Prints the soliton classification over the built-in parameter grid.
//!
//!     cargo run -p algsoliton-core --example classify

use algsoliton_core::catalog::{self, SpaceType};
use algsoliton_core::solve_algebraic_soliton;

fn main() {
    for ty in SpaceType::ALL {
        for params in ty.sample_grid() {
            let label: Vec<String> = params.iter().map(|(k, v)| format!("{k}={v}")).collect();
            let space = catalog::build(ty, &params).expect("grid points are in the domain");
            match solve_algebraic_soliton(&space) {
                Ok(r) => {
                    let c = r.c().map(|c| c.to_string()).unwrap_or_else(|| "-".into());
                    println!(
                        "{ty} {:<22} {:<12} c = {c}",
                        label.join(" "),
                        r.status.to_string()
                    );
                }
                Err(e) => println!("{ty} {:<22} error: {e}", label.join(" ")),
            }
        }
    }
}
