//! Identities among the distinguished automorphisms, checked on random witnesses.

use std::fmt;
use std::sync::Arc;

use crate::exactfield::CycScalar;
use crate::families::{Family, FamilyTag};
use crate::linalg::Matrix;

use super::random::{scalar, seeded, special_linear};
use super::{AutError, Generator};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationResult {
    pub name: String,
    pub trials: usize,
    pub failures: usize,
}

impl RelationResult {
    pub fn passed(&self) -> bool {
        self.failures == 0 && self.trials > 0
    }
}

#[derive(Debug, Clone, Default)]
pub struct RelationReport {
    pub results: Vec<RelationResult>,
}

impl RelationReport {
    pub fn all_passed(&self) -> bool {
        !self.results.is_empty() && self.results.iter().all(RelationResult::passed)
    }

    fn record(&mut self, name: &str, ok: bool) {
        match self.results.iter_mut().find(|r| r.name == name) {
            Some(r) => {
                r.trials += 1;
                r.failures += usize::from(!ok);
            }
            None => self.results.push(RelationResult { name: name.to_string(), trials: 1, failures: usize::from(!ok) }),
        }
    }
}

impl fmt::Display for RelationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.results {
            let status = if r.passed() { "ok" } else { "FAILED" };
            writeln!(f, "{}: {status} ({} trials, {} failures)", r.name, r.trials, r.failures)?;
        }
        Ok(())
    }
}

struct Ctx<'a> {
    family: &'a Family,
}

impl Ctx<'_> {
    fn m(&self, g: Generator) -> Result<Matrix, AutError> {
        g.matrix(self.family)
    }

    fn word(&self, w: Vec<Generator>) -> Result<Matrix, AutError> {
        let mut m = Matrix::identity(self.family.dim());
        for g in w {
            m = &m * &self.m(g)?;
        }
        Ok(m)
    }
}

fn conj(a: &Matrix, b: &Matrix) -> Matrix {
    &(a * b) * &a.inverse().expect("automorphisms are invertible")
}

fn inv_t(x: &Matrix) -> Matrix {
    x.transpose().inverse().expect("invertible")
}

/// Checks, on `trials` random witnesses per identity:
///
/// * on `gl`, `sl`, `psl`: `τ Ad(X,Y) τ⁻¹ = Ad(X⁻ᵗ, Y⁻ᵗ)`, `τ² = j(−1)`,
///   `τ j(λ) τ⁻¹ = j(λ⁻¹)`, and with equal blocks `π Ad(X,Y) π⁻¹ = Ad(Y,X)`,
///   `π τ π⁻¹ = τ³`;
/// * on `psl(2|2)`: `π (Ad×ρ)(X,Y,Z) π⁻¹ = (Ad×ρ)(Y, X, Z⁻ᵗ)`, and the same with `Z⁻ᵗ`
///   replaced by `PZP` for `P = (0 1; 1 0)`;
/// * on `D(α)`: `θ(σ,λ) Ad(X₁,X₂,X₃) θ(σ,λ)⁻¹ = Ad(X_σ(1), X_σ(2), X_σ(3))` for every `σ ∈ S₃`.
pub fn check_standard_relations(family: &Arc<Family>, seed: u64, trials: usize) -> Result<RelationReport, AutError> {
    let mut rng = seeded(seed);
    let ctx = Ctx { family };
    let mut report = RelationReport::default();
    let spec = &family.spec;
    let p = &spec.params;
    match spec.tag {
        FamilyTag::Gl | FamilyTag::Sl | FamilyTag::Psl => {
            let square = p[0] == p[1];
            let tau = ctx.m(Generator::Tau)?;
            for _ in 0..trials {
                let (x, y) = (special_linear(p[0], &mut rng), special_linear(p[1], &mut rng));
                let ad = ctx.m(Generator::Ad { x: x.clone(), y: y.clone() })?;
                let lhs = conj(&tau, &ad);
                let rhs = ctx.m(Generator::Ad { x: inv_t(&x), y: inv_t(&y) })?;
                report.record("tau Ad(X,Y) tau^-1 = Ad((X^t)^-1, (Y^t)^-1)", lhs == rhs);

                let l = scalar(&mut rng);
                let lhs = conj(&tau, &ctx.m(Generator::J(l.clone()))?);
                let rhs = ctx.m(Generator::J(l.inv().expect("nonzero")))?;
                report.record("tau j(l) tau^-1 = j(l^-1)", lhs == rhs);

                report.record("tau^2 = j(-1)", tau.pow(2) == ctx.m(Generator::J(CycScalar::from_int(-1)))?);

                if square {
                    let pi = ctx.m(Generator::Pi)?;
                    report.record("pi Ad(X,Y) pi^-1 = Ad(Y,X)", conj(&pi, &ad) == ctx.m(Generator::Ad { x: y, y: x })?);
                    report.record("pi tau pi^-1 = tau^3", conj(&pi, &tau) == tau.pow(3));
                    if spec.tag == FamilyTag::Psl && p[0] == 2 {
                        let (x, y, z) =
                            (special_linear(2, &mut rng), special_linear(2, &mut rng), special_linear(2, &mut rng));
                        let lhs = conj(
                            &pi,
                            &ctx.word(vec![Generator::Ad { x: x.clone(), y: y.clone() }, Generator::Rho(z.clone())])?,
                        );
                        let rhs =
                            ctx.word(vec![Generator::Ad { x: y.clone(), y: x.clone() }, Generator::Rho(inv_t(&z))])?;
                        report.record("pi (Ad x rho)(X,Y,Z) pi^-1 = (Ad x rho)(Y,X,(Z^t)^-1)", lhs == rhs);
                        // swapping B and C swaps the coordinates on which Z acts
                        let swap = Matrix::from_int_rows(&[&[0, 1], &[1, 0]]);
                        let rhs =
                            ctx.word(vec![Generator::Ad { x: y, y: x }, Generator::Rho(&(&swap * &z) * &swap)])?;
                        report.record("pi (Ad x rho)(X,Y,Z) pi^-1 = (Ad x rho)(Y,X,PZP), P = (0 1; 1 0)", lhs == rhs);
                    }
                }
            }
        }
        FamilyTag::DAlpha => {
            let perms = [[0, 1, 2], [1, 0, 2], [0, 2, 1], [2, 1, 0], [1, 2, 0], [2, 0, 1]];
            for t in 0..trials {
                let xs = [special_linear(2, &mut rng), special_linear(2, &mut rng), special_linear(2, &mut rng)];
                let perm = perms[t % perms.len()];
                let theta = ctx.m(Generator::Theta { perm, lambda: scalar(&mut rng) })?;
                let lhs = conj(&theta, &ctx.m(Generator::AdD(xs.clone()))?);
                let permuted = [xs[perm[0]].clone(), xs[perm[1]].clone(), xs[perm[2]].clone()];
                let rhs = ctx.m(Generator::AdD(permuted))?;
                report.record("theta(s,l) Ad(X1,X2,X3) theta(s,l)^-1 = Ad(X_s(1),X_s(2),X_s(3))", lhs == rhs);
            }
        }
        _ => {}
    }
    Ok(report)
}
