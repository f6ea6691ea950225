//! Controller interconnection, strength and efficiency, and the
//! definitional sublattice-restriction computation of the degree of autonomy
//! for scalar systems.
//!
//! Attaching a controller to a plant stacks their law matrices; the strength
//! of the controller is the increase in the degree of autonomy it effects.
//! A controller is certified maximally efficient when its strength attains
//! the generic ceiling for its row count.

use crate::behavior::{degree_of_ideal, AutonomyDegree, SystemMatrix};
use crate::ideal::LaurentIdeal;

/// A coordinate sublattice of `Z^n`, given by a strictly increasing set of
/// 0-based variable indices.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SublatticeEmbedding {
    n: usize,
    indices: Vec<usize>,
}

impl SublatticeEmbedding {
    pub fn new(n: usize, indices: Vec<usize>) -> SublatticeEmbedding {
        assert!(
            indices.windows(2).all(|w| w[0] < w[1]),
            "sublattice indices must be strictly increasing"
        );
        assert!(
            indices.iter().all(|&i| i < n),
            "sublattice index out of range"
        );
        SublatticeEmbedding { n, indices }
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn sublattice_dim(&self) -> usize {
        self.indices.len()
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }
}

/// Outcome of attaching a controller to a plant.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StrengthReport {
    pub n: usize,
    pub k: usize,
    pub plant_rows: usize,
    pub controller_rows: usize,
    pub delta_plant: AutonomyDegree,
    pub delta_controlled: AutonomyDegree,
    /// Increase in the degree of autonomy; infinite when the controlled
    /// system is the zero behavior or the plant already was.
    pub strength: AutonomyDegree,
    /// Generic degree of autonomy of an `(l + l') x k` system:
    /// `l + l' - k + 1` clamped to `[0, n]`, infinity beyond `n`.
    pub generic_bound: AutonomyDegree,
    /// True when the strength attains the ceiling reachable given the
    /// plant's own degree, i.e. `generic_bound - delta_plant`.
    pub max_efficient: bool,
}

/// The controlled system: the stacked matrix presenting the sum of the two
/// row modules.
pub fn interconnect(plant: &SystemMatrix, controller: &SystemMatrix) -> SystemMatrix {
    assert_eq!(plant.n(), controller.n(), "lattice dimension mismatch");
    assert_eq!(plant.k(), controller.k(), "system variable count mismatch");
    let mut rows = plant.rows().to_vec();
    rows.extend(controller.rows().iter().cloned());
    SystemMatrix::new(plant.n(), plant.k(), rows)
}

/// Generic degree of autonomy of an `l x k` system in `n` variables.
pub fn generic_degree(n: usize, k: usize, rows: usize) -> AutonomyDegree {
    if rows < k {
        return AutonomyDegree::Finite(0);
    }
    let s = rows - k + 1;
    if s <= n {
        AutonomyDegree::Finite(s)
    } else {
        AutonomyDegree::Infinite
    }
}

/// Computes the degree of autonomy of plant and controlled system, the
/// strength of the controller and the efficiency certificate.
pub fn strength(plant: &SystemMatrix, controller: &SystemMatrix) -> StrengthReport {
    let controlled = interconnect(plant, controller);
    let delta_plant = plant.degree_of_autonomy();
    let delta_controlled = controlled.degree_of_autonomy();

    let strength = match (delta_plant, delta_controlled) {
        (AutonomyDegree::Infinite, _) => AutonomyDegree::Infinite,
        (_, AutonomyDegree::Infinite) => AutonomyDegree::Infinite,
        (AutonomyDegree::Finite(p), AutonomyDegree::Finite(c)) => {
            assert!(c >= p, "interconnection cannot lower the degree of autonomy");
            AutonomyDegree::Finite(c - p)
        }
    };

    let generic_bound = generic_degree(plant.n(), plant.k(), plant.num_rows() + controller.num_rows());

    // The ceiling on the strength for this plant: the generic degree of the
    // combined system minus what the plant already has.
    let ceiling = match (generic_bound, delta_plant) {
        (AutonomyDegree::Infinite, _) => AutonomyDegree::Infinite,
        (_, AutonomyDegree::Infinite) => AutonomyDegree::Infinite,
        (AutonomyDegree::Finite(b), AutonomyDegree::Finite(p)) => {
            AutonomyDegree::Finite(b.saturating_sub(p))
        }
    };

    StrengthReport {
        n: plant.n(),
        k: plant.k(),
        plant_rows: plant.num_rows(),
        controller_rows: controller.num_rows(),
        delta_plant,
        delta_controlled,
        strength,
        generic_bound,
        max_efficient: strength == ceiling,
    }
}

/// True when the controller's strength attains the generic ceiling for its
/// size; a sufficient certificate of maximal efficiency.
pub fn is_max_efficient(plant: &SystemMatrix, controller: &SystemMatrix) -> bool {
    strength(plant, controller).max_efficient
}

/// Restricts a scalar system to a coordinate sublattice: the restricted
/// system is presented by the generators of the intersection of its
/// characteristic ideal with the subring on the kept variables.
pub fn restrict(m: &SystemMatrix, emb: &SublatticeEmbedding) -> SystemMatrix {
    assert_eq!(m.k(), 1, "restriction is implemented for scalar systems only");
    assert_eq!(m.n(), emb.ambient_dim(), "embedding dimension mismatch");
    let restricted = m.characteristic_ideal().restrict(emb.indices());
    SystemMatrix::scalar(
        emb.sublattice_dim(),
        restricted.saturated_basis().gens().to_vec(),
    )
}

/// Degree of autonomy of a scalar system computed from its definition: the
/// codimension of the largest coordinate sublattice whose restriction is not
/// autonomous.
///
/// Enumerates index subsets from the largest down and returns at the first
/// size admitting a non-autonomous restriction; for a proper characteristic
/// ideal the empty sublattice always qualifies.
pub fn degree_by_restriction_oracle(m: &SystemMatrix) -> AutonomyDegree {
    assert_eq!(m.k(), 1, "restriction oracle is implemented for scalar systems only");
    let n = m.n();
    let ci = m.characteristic_ideal();
    if !ci.is_proper() {
        return AutonomyDegree::Infinite;
    }
    for size in (0..=n).rev() {
        let found = subsets_of_size(n, size)
            .into_iter()
            .any(|keep| restriction_is_non_autonomous(&ci, &keep));
        if found {
            return AutonomyDegree::Finite(n - size);
        }
    }
    unreachable!("a proper ideal meets the constants trivially");
}

fn restriction_is_non_autonomous(ci: &LaurentIdeal, keep: &[usize]) -> bool {
    if keep.is_empty() {
        // restriction to the origin: non-autonomous iff the ideal contains
        // no nonzero constant, i.e. is proper
        return ci.is_proper();
    }
    if keep.len() == ci.dim() {
        return ci.is_zero();
    }
    ci.restrict(keep).is_zero()
}

fn subsets_of_size(n: usize, size: usize) -> Vec<Vec<usize>> {
    use itertools::Itertools;
    (0..n).combinations(size).collect()
}

/// Degree of autonomy read off a characteristic ideal; exposed for callers
/// holding the ideal already.
pub fn degree_from_characteristic_ideal(n: usize, ci: &LaurentIdeal) -> AutonomyDegree {
    degree_of_ideal(n, ci)
}
