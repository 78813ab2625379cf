macro_rules! example {
    ($name:ident, $file:literal) => {
        mod $name {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }
        #[test]
        fn $name() {
            $name::run_example().expect("example runs");
        }
    };
}

example!(ring_r, "ring_r.rs");
example!(rt0_products, "rt0_products.rs");
example!(odot_basis, "odot_basis.rs");
example!(class_substitution, "class_substitution.rs");
example!(super_operad, "super_operad.rs");
example!(vowa, "vowa.rs");
example!(mtilde_compositions, "mtilde_compositions.rs");
example!(important_identities, "important_identities.rs");
example!(base_config, "base_config.rs");
example!(verify_report, "verify_report.rs");
