//! Catalog of classical lattices.

use num_traits::{One, Zero};
use thiserror::Error;

use crate::exactq::{denominator_lcm, IMatrix, Int, QMatrix, Rat};
use crate::lattices::Lattice;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CatalogError {
    #[error("invalid catalog parameters: {0}")]
    Invalid(String),
}

/// Parameterized catalog identifiers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CatalogId {
    /// Cubic lattice Z^n.
    Z(usize),
    /// Root lattice A_n in the zero-sum hyperplane of R^{n+1}.
    A(usize),
    /// Dual of A_n.
    ADual(usize),
    /// Coxeter lattice A_n^r, r dividing n+1: contains A_n to index r.
    AR(usize, usize),
    /// Checkerboard lattice D_n (even coordinate sums).
    D(usize),
    /// Dual of D_n.
    DDual(usize),
    /// D_n^+ = D_n united with its half-ones coset (n even).
    DPlus(usize),
    E6,
    E6Dual,
    E7,
    E7Dual,
    E8,
}

impl CatalogId {
    pub fn name(&self) -> String {
        match self {
            CatalogId::Z(n) => format!("Z{n}"),
            CatalogId::A(n) => format!("A{n}"),
            CatalogId::ADual(n) => format!("A{n}*"),
            CatalogId::AR(n, r) => format!("A{n}^{r}"),
            CatalogId::D(n) => format!("D{n}"),
            CatalogId::DDual(n) => format!("D{n}*"),
            CatalogId::DPlus(n) => format!("D{n}+"),
            CatalogId::E6 => "E6".into(),
            CatalogId::E6Dual => "E6*".into(),
            CatalogId::E7 => "E7".into(),
            CatalogId::E7Dual => "E7*".into(),
            CatalogId::E8 => "E8".into(),
        }
    }
}

fn diff(dim: usize, i: usize, j: usize) -> Vec<Rat> {
    let mut v = vec![Rat::zero(); dim];
    v[i] = Rat::one();
    v[j] = -Rat::one();
    v
}

fn a_n_generators(n: usize) -> Vec<Vec<Rat>> {
    (0..n).map(|i| diff(n + 1, i, i + 1)).collect()
}

fn d_n_generators(n: usize) -> Vec<Vec<Rat>> {
    let mut gens: Vec<Vec<Rat>> = (0..n - 1).map(|i| diff(n, i, i + 1)).collect();
    let mut plus = vec![Rat::zero(); n];
    plus[n - 2] = Rat::one();
    plus[n - 1] = Rat::one();
    gens.push(plus);
    gens
}

fn half_ones(n: usize) -> Vec<Rat> {
    vec![Rat::new(Int::one(), Int::from(2)); n]
}

/// Builds the named lattice with an explicit rational basis per the
/// classical coordinate definitions; duals are computed, not hand-coded.
pub fn catalog_build(id: &CatalogId) -> Result<Lattice, CatalogError> {
    let name = id.name();
    let bad = |msg: &str| CatalogError::Invalid(format!("{name}: {msg}"));
    let lattice = match id {
        CatalogId::Z(n) => {
            if *n == 0 {
                return Err(bad("n >= 1 required"));
            }
            Lattice::from_basis(QMatrix::identity(*n), name.clone())
        }
        CatalogId::A(n) => {
            if *n == 0 {
                return Err(bad("n >= 1 required"));
            }
            Lattice::from_generators(&a_n_generators(*n), name.clone())
        }
        CatalogId::ADual(n) => {
            let a = catalog_build(&CatalogId::A(*n))?;
            return Ok(rename(a.dual(), name));
        }
        CatalogId::AR(n, r) => {
            if *n == 0 || *r == 0 || (*n + 1) % *r != 0 {
                return Err(bad("requires r | n+1"));
            }
            // e1-e2, ..., e1-e_n, plus (1/r) * sum_{i=2}^{n+1} (e1 - e_i)
            let dim = n + 1;
            let mut gens: Vec<Vec<Rat>> = (1..*n).map(|j| diff(dim, 0, j)).collect();
            let mut glue = vec![-Rat::new(Int::one(), Int::from(*r as i64)); dim];
            glue[0] = Rat::new(Int::from(*n as i64), Int::from(*r as i64));
            gens.push(glue);
            Lattice::from_generators(&gens, name.clone())
        }
        CatalogId::D(n) => {
            if *n < 3 {
                return Err(bad("n >= 3 required"));
            }
            Lattice::from_generators(&d_n_generators(*n), name.clone())
        }
        CatalogId::DDual(n) => {
            let d = catalog_build(&CatalogId::D(*n))?;
            return Ok(rename(d.dual(), name));
        }
        CatalogId::DPlus(n) => {
            if *n < 2 || *n % 2 != 0 {
                return Err(bad("even n >= 2 required"));
            }
            let mut gens = d_n_generators(*n);
            gens.push(half_ones(*n));
            Lattice::from_generators(&gens, name.clone())
        }
        CatalogId::E8 => {
            let mut gens = d_n_generators(8);
            gens.push(half_ones(8));
            Lattice::from_generators(&gens, name.clone())
        }
        CatalogId::E7 => {
            // sublattice of E8 with equal last two coordinates
            let e8 = catalog_build(&CatalogId::E8)?;
            return Ok(rename(coordinate_sublattice(&e8, &[(6, 7)]), name));
        }
        CatalogId::E6 => {
            // sublattice of E8 with equal last three coordinates
            let e8 = catalog_build(&CatalogId::E8)?;
            return Ok(rename(coordinate_sublattice(&e8, &[(5, 6), (6, 7)]), name));
        }
        CatalogId::E7Dual => {
            let e7 = catalog_build(&CatalogId::E7)?;
            return Ok(rename(e7.dual(), name));
        }
        CatalogId::E6Dual => {
            let e6 = catalog_build(&CatalogId::E6)?;
            return Ok(rename(e6.dual(), name));
        }
    };
    lattice.map_err(|e| CatalogError::Invalid(format!("{name}: {e}")))
}

fn rename(mut l: Lattice, name: String) -> Lattice {
    l.provenance = name;
    l
}

/// Sublattice of points whose ambient coordinates are equal at each listed
/// pair, computed through the integer kernel of the corresponding linear
/// conditions on basis coordinates.
fn coordinate_sublattice(l: &Lattice, equal_pairs: &[(usize, usize)]) -> Lattice {
    let basis = l.basis().expect("catalog lattices carry bases");
    let k = basis.cols();
    let rows: Vec<Vec<Rat>> = equal_pairs
        .iter()
        .map(|&(a, b)| (0..k).map(|j| &basis[(a, j)] - &basis[(b, j)]).collect())
        .collect();
    let scale = denominator_lcm(rows.iter().flatten());
    let int_rows = IMatrix::from_fn(rows.len(), k, |i, j| {
        let r = &rows[i][j];
        r.numer() * (&scale / r.denom())
    });
    let kernel = crate::exactq::integer_kernel(&int_rows);
    let gens: Vec<Vec<Rat>> = kernel
        .iter()
        .map(|z| {
            let zr: Vec<Rat> = z.iter().map(|x| Rat::from_integer(x.clone())).collect();
            basis.mul_vec(&zr)
        })
        .collect();
    Lattice::from_generators(&gens, l.provenance.clone()).expect("kernel is nontrivial")
}
