use serde::Serialize;

use crate::error::{Error, Result};
use crate::function::RadialFunction;
use crate::geom::{Metric, RadialModel};

/// The three integrals making up the Yamabe quotient.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FunctionalParts {
    /// `∫ ‖∇f‖²`
    pub energy: f64,
    /// `∫ Scal f²`
    pub potential: f64,
    /// `∫ f^p`
    pub mass: f64,
}

/// The Yamabe quotient discretized on a radial model, with its exact gradient
/// with respect to the nodal samples.
pub(crate) struct DiscreteFunctional<'a> {
    model: &'a RadialModel,
    a_n: f64,
    p: f64,
}

impl<'a> DiscreteFunctional<'a> {
    pub(crate) fn new(model: &'a RadialModel) -> Result<Self> {
        let n = model.dimension();
        if n < 3 {
            return Err(Error::domain(format!(
                "the Yamabe functional needs n >= 3, got {n}"
            )));
        }
        let nf = n as f64;
        Ok(DiscreteFunctional {
            model,
            a_n: 4.0 * (nf - 1.0) / (nf - 2.0),
            p: 2.0 * nf / (nf - 2.0),
        })
    }

    pub(crate) fn model(&self) -> &RadialModel {
        self.model
    }

    pub(crate) fn a_n(&self) -> f64 {
        self.a_n
    }

    pub(crate) fn parts(&self, f: &[f64]) -> FunctionalParts {
        let p = self.p;
        FunctionalParts {
            energy: self.model.dirichlet_energy(f),
            potential: self.model.potential(f),
            mass: self.model.integrate(f, |x| x.powf(p)),
        }
    }

    pub(crate) fn quotient(&self, parts: &FunctionalParts) -> f64 {
        (self.a_n * parts.energy + parts.potential) / parts.mass.powf(2.0 / self.p)
    }

    pub(crate) fn value(&self, f: &[f64]) -> f64 {
        self.quotient(&self.parts(f))
    }

    /// Quotient value and its gradient with respect to every nodal sample.
    pub(crate) fn value_and_gradient(&self, f: &[f64]) -> (f64, Vec<f64>) {
        let m = self.model;
        let p = self.p;
        let (area, mid_area) = (m.node_area(), m.mid_area());
        let (scal, mid_scal) = (m.node_scal(), m.mid_scal());
        let nodes = m.nodes();
        let len = f.len();

        let mut d_num = vec![0.0; len];
        let mut d_mass = vec![0.0; len];
        let (mut energy, mut potential, mut mass) = (0.0, 0.0, 0.0);

        for k in 0..m.cells() {
            let (f0, f1) = (f[k], f[k + 1]);
            let fm = 0.5 * (f0 + f1);

            let ell = m.cell_length(k);
            let vol = m.cell_volume(k);
            let slope = (f1 - f0) / ell;
            energy += vol * slope * slope;
            let de = 2.0 * self.a_n * vol * slope / ell;
            d_num[k] -= de;
            d_num[k + 1] += de;

            let w = m.arc_scale() * (nodes[k + 1] - nodes[k]) / 6.0;
            let (s0, sm, s1) = (
                area[k] * scal[k],
                4.0 * mid_area[k] * mid_scal[k],
                area[k + 1] * scal[k + 1],
            );
            potential += w * (s0 * f0 * f0 + sm * fm * fm + s1 * f1 * f1);
            d_num[k] += w * (2.0 * s0 * f0 + sm * fm);
            d_num[k + 1] += w * (sm * fm + 2.0 * s1 * f1);

            let (a0, am, a1) = (area[k], 4.0 * mid_area[k], area[k + 1]);
            let (p0, pm, p1) = (f0.powf(p - 1.0), fm.powf(p - 1.0), f1.powf(p - 1.0));
            mass += w * (a0 * p0 * f0 + am * pm * fm + a1 * p1 * f1);
            d_mass[k] += w * p * (a0 * p0 + 0.5 * am * pm);
            d_mass[k + 1] += w * p * (0.5 * am * pm + a1 * p1);
        }

        let numerator = self.a_n * energy + potential;
        let denom = mass.powf(2.0 / p);
        let value = numerator / denom;
        // d(mass^{2/p}) = (2/p) mass^{2/p - 1} d(mass)
        let dd = 2.0 / p * mass.powf(2.0 / p - 1.0);
        let grad = d_num
            .iter()
            .zip(&d_mass)
            .map(|(dn, dm)| (dn - value * dd * dm) / denom)
            .collect();
        (value, grad)
    }
}

/// `Y_g(f)` for a positive radial function.
///
/// On products, `f` is a function of the first factor's polar angle, with the
/// radial coordinate measured as arc length along that factor's meridian.
pub fn yamabe_functional(metric: &Metric, f: &RadialFunction) -> Result<f64> {
    let model = metric.radial_model();
    let functional = DiscreteFunctional::new(&model)?;
    f.ensure_positive()?;
    let samples = f.samples_on(&model)?;
    Ok(functional.value(&samples))
}
