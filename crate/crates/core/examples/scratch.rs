// scratch diagnostics (deleted before release)
use nalgebra::{Complex, DMatrix};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use srcenum::covariance::{CovKind, CovMatrix};
use srcenum::solver::{decompose, SolverParams};

type C64 = Complex<f64>;

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    let a = DMatrix::from_fn(4, 4, |_, _| {
        C64::new(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5)
    });
    let psd = &a * a.adjoint() + DMatrix::<C64>::identity(4, 4) * C64::new(0.1, 0.0);
    let data = (&psd + psd.adjoint()) * C64::new(0.5, 0.0);
    let r = CovMatrix::from_matrix(data.clone(), CovKind::Sample).unwrap();
    let c = 3.0;
    let scaled = CovMatrix::from_matrix(&data * C64::new(c, 0.0), CovKind::Sample).unwrap();

    let p = SolverParams::new(0.4);
    let mut p_scaled = p.clone();
    p_scaled.eta = p.eta * c;

    let res = decompose(&r, &p).unwrap();
    let res_scaled = decompose(&scaled, &p_scaled).unwrap();
    println!("iters {} vs {}", res.iterations, res_scaled.iterations);
    println!("conv {} vs {}", res.converged, res_scaled.converged);
    println!("est {} vs {}", res.est_num_sources, res_scaled.est_num_sources);
    println!("|L| {} vs {}", res.l_hat.norm(), res_scaled.l_hat.norm());
    println!("|d| {:?} vs {:?}", res.d_hat.as_slice(), res_scaled.d_hat.as_slice());
    let dl = (&res_scaled.l_hat - res.l_hat * C64::new(c, 0.0)).norm();
    println!("dl = {}, rel = {}", dl, dl / res_scaled.l_hat.norm());
}
