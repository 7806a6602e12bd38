// Each example is compiled into this test binary and its main run once.

macro_rules! example {
    ($name:ident) => {
        mod $name {
            include!(concat!("../examples/", stringify!($name), ".rs"));

            #[test]
            fn runs() {
                main().unwrap();
            }
        }
    };
}

example!(permutations);
example!(constructors);
example!(subgroup_lattice);
example!(ab_growth);
example!(relative_growth);
example!(character_table);
example!(zeta);
example!(monomial);
example!(verify_corpus);
example!(replay);
