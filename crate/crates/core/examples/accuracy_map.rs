// Relative error of w against the vendored high-precision grid, per region.

use std::collections::BTreeMap;
use std::path::PathBuf;

use faddeeva_trapz::cli::accuracy::{accuracy_rows, summarize, Summary};
use faddeeva_trapz::cli::reference::ReferenceSet;
use faddeeva_trapz::cli::GridSpec;
use faddeeva_trapz::errlike::FunctionKind;
use faddeeva_trapz::tuning::EvalParams;

pub fn run_example() -> Summary {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data/inset_w.csv");
    let refs = ReferenceSet::from_path(&path).unwrap();
    let points = GridSpec::inset().points();
    let rows = accuracy_rows(FunctionKind::W, &points, &refs, &EvalParams::double_precision()).unwrap();

    let mut by_region: BTreeMap<_, Vec<_>> = BTreeMap::new();
    for r in &rows {
        by_region.entry(r.region).or_default().push(*r);
    }
    for (region, rs) in &by_region {
        println!("{region:>9}: {}", summarize(rs));
    }
    let all = summarize(&rows);
    println!("      all: {all}");
    all
}

#[allow(dead_code)]
fn main() {
    run_example();
}
