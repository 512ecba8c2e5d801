use ghostq8::field::FieldSpec;
use ghostq8::stable::{lower_bound_pool, lower_bound_search, SearchOutcome, StableCtx};
use std::time::{Duration, Instant};

fn main() {
    let field = FieldSpec::gf2();
    let ctx = StableCtx::new(field).unwrap();
    let pool = lower_bound_pool(&ctx, 2026, 6);
    println!(
        "pool size {} dims {:?}",
        pool.len(),
        pool.iter().map(|m| m.dim()).collect::<Vec<_>>()
    );
    let t0 = Instant::now();
    match lower_bound_search(&ctx, Duration::from_secs(480), 2026) {
        Ok(SearchOutcome::Found(w)) => {
            println!("FOUND in {:?}", t0.elapsed());
            println!(
                "first:  {} -> {} rank {}",
                w.first.source().dim(),
                w.first.target().dim(),
                w.first.mat().rank()
            );
            println!(
                "second: {} -> {} rank {}",
                w.second.source().dim(),
                w.second.target().dim(),
                w.second.mat().rank()
            );
        }
        Ok(SearchOutcome::Inconclusive { composites_tried }) => {
            println!(
                "INCONCLUSIVE after {:?}, {} composites",
                t0.elapsed(),
                composites_tried
            );
        }
        Err(e) => println!("ERROR: {e:?}"),
    }
}
