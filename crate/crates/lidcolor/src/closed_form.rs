//! Closed-form lid-chromatic numbers for paths, cycles, and their Cartesian
//! and tensor products, with strict domain validation.
//!
//! Each function is a pure table lookup; values outside a table's proven
//! domain are rejected rather than extrapolated. The `_case` variants also
//! name the table row that fired, for diagnostics and the CLI.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{cartesian_product, tensor_product, Graph, ProductLabeling};

/// One instance of a graph family with a known lid-chromatic number.
///
/// `TensorCyclePath` keeps its argument order fixed (cycle first) because the
/// two factors play asymmetric roles in its table; the other two-parameter
/// families are commutative and normalize internally.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FamilySpec {
    Path { n: usize },
    Cycle { n: usize },
    CartCyclePath { m: usize, n: usize },
    CartCycleCycle { m: usize, n: usize },
    TensorPathPath { m: usize, n: usize },
    TensorCyclePath { m: usize, n: usize },
    TensorCycleCycle { m: usize, n: usize },
}

impl FamilySpec {
    /// Parses the CLI family names (`path`, `cycle`, `cart-cycle-path`,
    /// `cart-cycle-cycle`, `tensor-path-path`, `tensor-cycle-path`,
    /// `tensor-cycle-cycle`).
    pub fn from_name(name: &str, m: usize, n: Option<usize>) -> Result<Self> {
        let two = |n: Option<usize>| {
            n.ok_or_else(|| Error::param(format!("family {name} needs both -m and -n")))
        };
        Ok(match name {
            "path" => FamilySpec::Path { n: m },
            "cycle" => FamilySpec::Cycle { n: m },
            "cart-cycle-path" => FamilySpec::CartCyclePath { m, n: two(n)? },
            "cart-cycle-cycle" => FamilySpec::CartCycleCycle { m, n: two(n)? },
            "tensor-path-path" => FamilySpec::TensorPathPath { m, n: two(n)? },
            "tensor-cycle-path" => FamilySpec::TensorCyclePath { m, n: two(n)? },
            "tensor-cycle-cycle" => FamilySpec::TensorCycleCycle { m, n: two(n)? },
            other => return Err(Error::param(format!("unknown family {other}"))),
        })
    }

    pub fn name(&self) -> &'static str {
        match self {
            FamilySpec::Path { .. } => "path",
            FamilySpec::Cycle { .. } => "cycle",
            FamilySpec::CartCyclePath { .. } => "cart-cycle-path",
            FamilySpec::CartCycleCycle { .. } => "cart-cycle-cycle",
            FamilySpec::TensorPathPath { .. } => "tensor-path-path",
            FamilySpec::TensorCyclePath { .. } => "tensor-cycle-path",
            FamilySpec::TensorCycleCycle { .. } => "tensor-cycle-cycle",
        }
    }

    /// The lid-chromatic number of this instance.
    pub fn chi_lid(&self) -> Result<u32> {
        Ok(self.chi_lid_case()?.0)
    }

    /// The lid-chromatic number plus the table case that produced it.
    pub fn chi_lid_case(&self) -> Result<(u32, &'static str)> {
        match *self {
            FamilySpec::Path { n } => chi_lid_path_case(n),
            FamilySpec::Cycle { n } => chi_lid_cycle_case(n),
            FamilySpec::CartCyclePath { m, n } => chi_lid_cart_cycle_path_case(m, n),
            FamilySpec::CartCycleCycle { m, n } => chi_lid_cart_cycle_cycle_case(m, n),
            FamilySpec::TensorPathPath { m, n } => chi_lid_tensor_path_path_case(m, n),
            FamilySpec::TensorCyclePath { m, n } => chi_lid_tensor_cycle_path_case(m, n),
            FamilySpec::TensorCycleCycle { m, n } => chi_lid_tensor_cycle_cycle_case(m, n),
        }
    }

    /// Builds the instance graph with its grid labeling (paths and cycles get
    /// a single-row labeling). Validates parameters but not table domains:
    /// `Path {n: 1}` builds even though its lid value is out of table range.
    pub fn build(&self) -> Result<(Graph, ProductLabeling)> {
        let cycle = |n: usize| -> Result<Graph> {
            if n < 3 {
                return Err(Error::param(format!("cycle needs n >= 3, got {n}")));
            }
            Ok(Graph::cycle(n))
        };
        let path = |n: usize| -> Result<Graph> {
            if n < 1 {
                return Err(Error::param("path needs n >= 1"));
            }
            Ok(Graph::path(n))
        };
        Ok(match *self {
            FamilySpec::Path { n } => {
                (path(n)?, ProductLabeling { rows: 1, cols: n })
            }
            FamilySpec::Cycle { n } => {
                (cycle(n)?, ProductLabeling { rows: 1, cols: n })
            }
            FamilySpec::CartCyclePath { m, n } => cartesian_product(&cycle(m)?, &path(n)?),
            FamilySpec::CartCycleCycle { m, n } => cartesian_product(&cycle(m)?, &cycle(n)?),
            FamilySpec::TensorPathPath { m, n } => tensor_product(&path(m)?, &path(n)?),
            FamilySpec::TensorCyclePath { m, n } => tensor_product(&cycle(m)?, &path(n)?),
            FamilySpec::TensorCycleCycle { m, n } => tensor_product(&cycle(m)?, &cycle(n)?),
        })
    }
}

fn domain(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::param(msg.to_string()))
    }
}

/// chi_lid(P_n) for n >= 2.
pub fn chi_lid_path(n: usize) -> Result<u32> {
    Ok(chi_lid_path_case(n)?.0)
}

pub fn chi_lid_path_case(n: usize) -> Result<(u32, &'static str)> {
    domain(n >= 2, "path table needs n >= 2")?;
    Ok(if n == 2 {
        (2, "n = 2")
    } else if n % 2 == 1 {
        (3, "n odd")
    } else {
        (4, "n even, n >= 4")
    })
}

/// chi_lid(C_n) for n >= 3.
pub fn chi_lid_cycle(n: usize) -> Result<u32> {
    Ok(chi_lid_cycle_case(n)?.0)
}

pub fn chi_lid_cycle_case(n: usize) -> Result<(u32, &'static str)> {
    domain(n >= 3, "cycle table needs n >= 3")?;
    Ok(if n == 3 || n.is_multiple_of(4) {
        (3, "n = 3 or n ≡ 0 (mod 4)")
    } else if n == 5 || n == 7 {
        (5, "n ∈ {5, 7}")
    } else {
        (4, "otherwise")
    })
}

/// chi_lid(C_m □ P_n) for m >= 3, n >= 2.
pub fn chi_lid_cart_cycle_path(m: usize, n: usize) -> Result<u32> {
    Ok(chi_lid_cart_cycle_path_case(m, n)?.0)
}

pub fn chi_lid_cart_cycle_path_case(m: usize, n: usize) -> Result<(u32, &'static str)> {
    domain(m >= 3 && n >= 2, "cylinder table needs m >= 3 and n >= 2")?;
    Ok(if m == 3 {
        (5, "m = 3")
    } else if m % 2 == 1 {
        (4, "m odd, m >= 5")
    } else {
        (3, "m even")
    })
}

/// chi_lid(C_m □ C_n) for m, n >= 3; commutative.
pub fn chi_lid_cart_cycle_cycle(m: usize, n: usize) -> Result<u32> {
    Ok(chi_lid_cart_cycle_cycle_case(m, n)?.0)
}

pub fn chi_lid_cart_cycle_cycle_case(m: usize, n: usize) -> Result<(u32, &'static str)> {
    domain(m >= 3 && n >= 3, "torus table needs m, n >= 3")?;
    let (a, b) = (m.min(n), m.max(n));
    Ok(if a == 3 {
        (5, "min(m, n) = 3")
    } else if a % 2 == 0 && b % 2 == 0 {
        (3, "m and n even")
    } else {
        (4, "otherwise")
    })
}

/// chi_lid(P_m × P_n) for m, n >= 2; commutative. A factor P_2 reduces the
/// product to two copies of the other path, so the value is that path's.
pub fn chi_lid_tensor_path_path(m: usize, n: usize) -> Result<u32> {
    Ok(chi_lid_tensor_path_path_case(m, n)?.0)
}

pub fn chi_lid_tensor_path_path_case(m: usize, n: usize) -> Result<(u32, &'static str)> {
    domain(m >= 2 && n >= 2, "tensor path table needs m, n >= 2")?;
    let (a, b) = (m.min(n), m.max(n));
    Ok(if a == 2 {
        let (v, _) = chi_lid_path_case(b)?;
        (v, "min(m, n) = 2: two copies of the longer path")
    } else if a % 2 == 0 && b % 2 == 0 {
        (4, "m and n even, both >= 4")
    } else {
        (3, "otherwise")
    })
}

/// chi_lid(C_m × P_n) for m >= 3, n >= 2; argument order fixed, cycle first.
pub fn chi_lid_tensor_cycle_path(m: usize, n: usize) -> Result<u32> {
    Ok(chi_lid_tensor_cycle_path_case(m, n)?.0)
}

pub fn chi_lid_tensor_cycle_path_case(m: usize, n: usize) -> Result<(u32, &'static str)> {
    domain(m >= 3 && n >= 2, "tensor cycle-path table needs m >= 3 and n >= 2")?;
    Ok(if n % 2 == 1 {
        (3, "n odd")
    } else if m.is_multiple_of(4) {
        (3, "m ≡ 0 (mod 4), n even")
    } else {
        (4, "otherwise")
    })
}

/// chi_lid(C_m × C_n) for m, n >= 3; commutative.
pub fn chi_lid_tensor_cycle_cycle(m: usize, n: usize) -> Result<u32> {
    Ok(chi_lid_tensor_cycle_cycle_case(m, n)?.0)
}

pub fn chi_lid_tensor_cycle_cycle_case(m: usize, n: usize) -> Result<(u32, &'static str)> {
    domain(m >= 3 && n >= 3, "tensor torus table needs m, n >= 3")?;
    let (a, b) = (m.min(n), m.max(n));
    Ok(if a % 2 == 0 || b % 2 == 0 {
        (3, "some factor even")
    } else if (a, b) == (3, 3) || (a, b) == (3, 5) {
        (5, "(m, n) ∈ {(3, 3), (3, 5)} up to order")
    } else {
        (4, "both odd, otherwise")
    })
}

/// Upper bounds from proper colorings of the factors: a Cartesian product is
/// lid-colorable with `chi_g * chi_h - 1` colors and a tensor product with
/// `chi_g * chi_h`.
pub fn generic_upper_bounds(chi_g: u32, chi_h: u32) -> Result<(u32, u32)> {
    domain(chi_g >= 2 && chi_h >= 2, "bounds need chromatic numbers >= 2")?;
    Ok((chi_g * chi_h - 1, chi_g * chi_h))
}
