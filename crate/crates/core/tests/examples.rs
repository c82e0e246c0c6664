//! Every runnable example doubles as a test.

macro_rules! example {
    ($module:ident, $file:literal, $test:ident) => {
        mod $module {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }

        #[test]
        fn $test() {
            $module::run_example().expect(concat!($file, " should run"));
        }
    };
}

example!(series_table, "series_table.rs", series_table_example_runs);
example!(verify_identities, "verify_identities.rs", verify_identities_example_runs);
example!(grunsky_inequalities, "grunsky_inequalities.rs", grunsky_inequalities_example_runs);
example!(reproduce_bounds, "reproduce_bounds.rs", reproduce_bounds_example_runs);
example!(certified_enclosures, "certified_enclosures.rs", certified_enclosures_example_runs);
example!(hankel_h31, "hankel_h31.rs", hankel_h31_example_runs);
example!(grid_export, "grid_export.rs", grid_export_example_runs);
