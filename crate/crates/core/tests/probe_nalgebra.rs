// Temporary probe: verify nalgebra's complex SVD and Hermitian eigendecomposition
// behave correctly (reconstruction, ordering) before building on them.

use nalgebra::{Complex, DMatrix};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type C64 = Complex<f64>;

fn random_complex(rng: &mut ChaCha8Rng, m: usize, n: usize) -> DMatrix<C64> {
    DMatrix::from_fn(m, n, |_, _| C64::new(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5))
}

#[test]
fn complex_svd_reconstructs_and_sorts() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for trial in 0..50 {
        let m = 2 + (trial % 5);
        let a = random_complex(&mut rng, m, m);
        let svd = a.clone().svd(true, true);
        let u = svd.u.as_ref().unwrap();
        let vt = svd.v_t.as_ref().unwrap();
        let sigma = DMatrix::from_diagonal(&svd.singular_values.map(|s| C64::new(s, 0.0)));
        let recon = u * sigma * vt;
        let err = (&a - &recon).norm() / a.norm();
        assert!(err < 1e-10, "trial {trial}: reconstruction error {err}");
        // sorted descending?
        let sv = &svd.singular_values;
        for i in 1..sv.len() {
            assert!(
                sv[i - 1] >= sv[i] - 1e-12,
                "trial {trial}: singular values not sorted: {:?}",
                sv
            );
        }
        // u unitary?
        let uhu = u.adjoint() * u;
        let eye = DMatrix::<C64>::identity(m, m);
        assert!((uhu - eye).norm() < 1e-10);
    }
}

#[test]
fn hermitian_eigen_reconstructs() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for trial in 0..50 {
        let m = 2 + (trial % 6);
        let a = random_complex(&mut rng, m, m);
        let h = (&a + a.adjoint()) * C64::new(0.5, 0.0);
        let eig = h.clone().symmetric_eigen();
        let lam = DMatrix::from_diagonal(&eig.eigenvalues.map(|x| C64::new(x, 0.0)));
        let recon = &eig.eigenvectors * lam * eig.eigenvectors.adjoint();
        let err = (&h - &recon).norm() / h.norm().max(1e-12);
        assert!(err < 1e-9, "trial {trial}: eig reconstruction error {err}");
        // eigenvalues real & imaginary dust of h on diagonal handled
        for &l in eig.eigenvalues.iter() {
            assert!(l.is_finite());
        }
    }
}

#[test]
fn svd_of_hermitian_matches_abs_eigenvalues() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..30 {
        let a = random_complex(&mut rng, 4, 4);
        let h = (&a + a.adjoint()) * C64::new(0.5, 0.0);
        let svd = h.clone().svd(false, false);
        let eig = h.symmetric_eigen();
        let mut abs_eigs: Vec<f64> = eig.eigenvalues.iter().map(|x| x.abs()).collect();
        abs_eigs.sort_by(|a, b| b.partial_cmp(a).unwrap());
        let mut svs: Vec<f64> = svd.singular_values.iter().copied().collect();
        svs.sort_by(|a, b| b.partial_cmp(a).unwrap());
        for (s, e) in svs.iter().zip(abs_eigs.iter()) {
            assert!((s - e).abs() < 1e-9, "sv {s} vs |eig| {e}");
        }
    }
}

#[test]
fn svd_rank_deficient() {
    // rank-1 Hermitian a a^H with ||a||^2 = 3
    let a = DMatrix::from_column_slice(3, 1, &[C64::new(1.0, 0.0), C64::new(0.0, 1.0), C64::new(-1.0, 0.0)]);
    let h = &a * a.adjoint();
    let svd = h.svd(true, true);
    let sv = &svd.singular_values;
    assert!((sv[0] - 3.0).abs() < 1e-10, "{:?}", sv);
    assert!(sv[1].abs() < 1e-10 && sv[2].abs() < 1e-10, "{:?}", sv);
}

#[test]
fn try_svd_on_tiny_norm_matrix() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let a = random_complex(&mut rng, 3, 3) * C64::new(1e-14, 0.0);
    let svd = a.clone().try_svd(true, true, 1e-15, 0);
    assert!(svd.is_some());
    let zero = DMatrix::<C64>::zeros(3, 3);
    let svd0 = zero.try_svd(true, true, 1e-15, 0);
    assert!(svd0.is_some());
}
