use std::f64::consts::TAU;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tri_moduli::pompeiu::solve;
use tri_moduli::shape::{ReferenceFrame, SideLengths};
use tri_moduli::space3::{foci, sample_circle, similarity_circle, sphere_invert, Point3, Sphere};

fn random_sides(rng: &mut impl Rng) -> SideLengths<f64> {
    loop {
        let v: [f64; 3] = std::array::from_fn(|_| rng.random_range(0.1..10.0));
        if let Ok(s) = SideLengths::new(v[0], v[1], v[2]) {
            return s;
        }
    }
}

#[test]
fn similarity_circle_laws() {
    let mut rng = ChaCha8Rng::seed_from_u64(33);
    let verts = ReferenceFrame::<f64>::standard().vertices().map(Point3::from_plane);
    let sigma = Sphere::unit();
    let mut tested = 0;
    while tested < 100 {
        let s = random_sides(&mut rng);
        let Ok(c) = similarity_circle(&s) else { continue };
        let (w, w1) = foci(&c);
        let sides = s.as_array();
        let mut apollonius = Vec::new();
        for i in 0..64 {
            let x = sample_circle(&c, i as f64 * TAU / 64.0);
            let d = verts.map(|v| x.distance(v));
            for k in 1..3 {
                let (lhs, rhs) = (d[k] / d[0], sides[k] / sides[0]);
                assert!((lhs - rhs).abs() <= 1e-8 * rhs, "{s:?}");
            }
            apollonius.push(x.distance(w) / x.distance(w1));
            let img = sphere_invert(&sigma, x).unwrap();
            assert!(c.distance_to(img) < 1e-9 * c.radius().max(1.0), "{s:?}");
            assert!(c.distance_to(x.reflect_z()) < 1e-9, "{s:?}");
        }
        let first = apollonius[0];
        assert!(apollonius.iter().all(|r| (r - first).abs() <= 1e-9 * first.max(1.0)));

        // meets z = 0 at exactly P and P′, and stands vertically
        let sol = solve(&s).unwrap();
        let ends = [sample_circle(&c, 0.0), sample_circle(&c, TAU / 2.0)];
        let (p, pp) = (Point3::from_plane(sol.p), Point3::from_plane(sol.p_prime.unwrap()));
        let scale = pp.norm().max(1.0);
        assert!(ends[1].distance(p) < 1e-10 * scale && ends[0].distance(pp) < 1e-10 * scale);
        assert_eq!(c.plane_normal().z, 0.0);
        tested += 1;
    }
}
