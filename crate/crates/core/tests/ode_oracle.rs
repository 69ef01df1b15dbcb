mod common;

use lunebound::{ModelSpace, Pose};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn propagation_matches_the_frenet_ode(c in -2.0f64..2.0, kappa in 0.3f64..3.0, s in 0.1f64..2.0) {
        let space = ModelSpace::new(c).unwrap();
        let exact = space.propagate(&Pose::origin(), kappa, s).unwrap().position.0;
        let ode = common::frenet_ode(c, kappa, s, 2000);
        prop_assert!((exact - ode).amax() <= 1e-7, "{exact:?} vs {ode:?}");
    }
}

#[test]
fn circles_close_after_their_circumference() {
    for (c, kappa) in [(1.0, 1.0), (-1.0, 2.0), (0.0, 0.5), (-0.5, 0.8)] {
        let space = ModelSpace::new(c).unwrap();
        let s = 2.0 * std::f64::consts::PI / (kappa * kappa + c).sqrt();
        let end = common::frenet_ode(c, kappa, s, 20_000);
        assert!((end - Pose::origin().position.0).amax() <= 1e-9, "c={c} κ={kappa}");
        let exact = space.propagate(&Pose::origin(), kappa, s).unwrap();
        assert!((exact.position.0 - Pose::origin().position.0).amax() <= 1e-12);
    }
}
