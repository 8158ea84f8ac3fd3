//! SO(4) coherent states of one hydrogenic shell.
//!
//! States are built in the product basis `|j m1>|j m2>` of the two commuting
//! SO(3) algebras `M = (L + A)/2` and `N = (L - A)/2`, and mapped to the
//! hydrogenic `|n l m>` basis with Clebsch-Gordan coefficients. All
//! observables are evaluated in the product basis, where `M` and `N` act by
//! diagonal and ladder matrix elements.

mod closed_form;
mod coupling;
mod export;
mod observables;
mod params;
mod state;

pub use closed_form::{
    dephasing_phi_eps, dephasing_phi_eta, eccentricity_of_eta, eta_of_eccentricity,
    l_variance_closed_form, planar_a1, planar_l2, planar_l3, so3_j3_variance, EtaBranch,
};
pub use coupling::{precompute, to_coupled, to_coupled_with, to_product, to_product_with, CouplingTable, Sector};
pub use export::{write_coupled_csv, write_json};
pub use observables::{observables, LEffConvention, ObservableReport};
pub use params::CoherentParams;
pub use state::{build_product_state, CoupledState, ProductState, DEFAULT_TRUNCATION};
