//! The acceptance suite: one test per criterion, each printing its pass/fail
//! line. `cargo test --test acceptance -- --nocapture` shows the full list.

use khsplit_core::selftest::{run_all, summary_line};

#[test]
fn acceptance_criteria() {
    let results = run_all();
    let mut all_pass = true;
    for r in &results {
        println!("{}", summary_line(r));
        if !r.pass {
            all_pass = false;
            println!("{}", r.detail);
        }
    }
    assert!(all_pass, "at least one acceptance criterion failed");
}
