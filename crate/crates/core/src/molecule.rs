//! Nuclear framework: element data and validated atom lists.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::math::dist;
use crate::{Error, Result, BOHR_IN_ANGSTROM};

const SYMBOLS: [&str; 86] = [
    "H", "He", "Li", "Be", "B", "C", "N", "O", "F", "Ne", "Na", "Mg", "Al", "Si", "P", "S", "Cl",
    "Ar", "K", "Ca", "Sc", "Ti", "V", "Cr", "Mn", "Fe", "Co", "Ni", "Cu", "Zn", "Ga", "Ge", "As",
    "Se", "Br", "Kr", "Rb", "Sr", "Y", "Zr", "Nb", "Mo", "Tc", "Ru", "Rh", "Pd", "Ag", "Cd", "In",
    "Sn", "Sb", "Te", "I", "Xe", "Cs", "Ba", "La", "Ce", "Pr", "Nd", "Pm", "Sm", "Eu", "Gd", "Tb",
    "Dy", "Ho", "Er", "Tm", "Yb", "Lu", "Hf", "Ta", "W", "Re", "Os", "Ir", "Pt", "Au", "Hg", "Tl",
    "Pb", "Bi", "Po", "At", "Rn",
];

// Bragg-Slater radii in ångström (Slater 1964), hydrogen set to 0.35 as in
// Becke's multicenter scheme; noble gases use the values common in DFT codes.
const BRAGG_SLATER_ANGSTROM: [f64; 54] = [
    0.35, 1.40, //
    1.45, 1.05, 0.85, 0.70, 0.65, 0.60, 0.50, 1.50, //
    1.80, 1.50, 1.25, 1.10, 1.00, 1.00, 1.00, 1.80, //
    2.20, 1.80, 1.60, 1.40, 1.35, 1.40, 1.40, 1.40, 1.35, 1.35, 1.35, 1.35, 1.30, 1.25, 1.15,
    1.15, 1.15, 1.90, //
    2.35, 2.00, 1.80, 1.55, 1.45, 1.45, 1.35, 1.30, 1.35, 1.40, 1.60, 1.55, 1.55, 1.45, 1.45,
    1.40, 1.40, 2.10,
];

/// Atomic number for an element symbol (case-insensitive).
pub fn atomic_number(symbol: &str) -> Option<u32> {
    SYMBOLS
        .iter()
        .position(|s| s.eq_ignore_ascii_case(symbol))
        .map(|i| i as u32 + 1)
}

pub fn element_symbol(atomic_number: u32) -> Option<&'static str> {
    SYMBOLS.get((atomic_number as usize).checked_sub(1)?).copied()
}

/// Bragg–Slater radius in bohr.
pub fn bragg_radius(atomic_number: u32) -> Result<f64> {
    (atomic_number as usize)
        .checked_sub(1)
        .and_then(|i| BRAGG_SLATER_ANGSTROM.get(i))
        .map(|r| r / BOHR_IN_ANGSTROM)
        .ok_or(Error::UnknownElement { atomic_number })
}

#[derive(Debug, Clone, PartialEq)]
pub struct Atom {
    pub symbol: String,
    pub atomic_number: u32,
    /// Nuclear charge; equals the atomic number unless an ECP was used.
    pub charge: f64,
    /// Position in bohr.
    pub position: [f64; 3],
}

impl Atom {
    pub fn new(symbol: &str, position: [f64; 3]) -> Result<Self> {
        let z = atomic_number(symbol).ok_or_else(|| Error::UnknownSymbol(symbol.to_string()))?;
        Ok(Self {
            symbol: element_symbol(z).unwrap_or(symbol).to_string(),
            atomic_number: z,
            charge: z as f64,
            position,
        })
    }
}

/// Minimum separation below which two nuclei count as coincident (bohr).
pub const MIN_SEPARATION: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq)]
pub struct Molecule {
    atoms: Vec<Atom>,
}

impl Molecule {
    pub fn new(atoms: Vec<Atom>) -> Result<Self> {
        if atoms.is_empty() {
            return Err(Error::Empty("molecule"));
        }
        for (i, a) in atoms.iter().enumerate() {
            if a.atomic_number == 0 {
                return Err(Error::InvalidArgument {
                    what: "atomic number",
                    value: 0.0,
                });
            }
            if a.position.iter().any(|c| !c.is_finite()) {
                return Err(Error::NonFinite("nuclear position"));
            }
            for (j, b) in atoms.iter().enumerate().take(i) {
                if dist(&a.position, &b.position) < MIN_SEPARATION {
                    return Err(Error::CoincidentCenters { first: j, second: i });
                }
            }
        }
        Ok(Self { atoms })
    }

    /// Homonuclear diatomic along z, centered at the origin.
    pub fn diatomic(symbol: &str, distance: f64) -> Result<Self> {
        if !(distance > 0.0) || !distance.is_finite() {
            return Err(Error::InvalidArgument {
                what: "internuclear distance",
                value: distance,
            });
        }
        let h = 0.5 * distance;
        Self::new(alloc::vec![
            Atom::new(symbol, [0.0, 0.0, -h])?,
            Atom::new(symbol, [0.0, 0.0, h])?,
        ])
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn positions(&self) -> impl Iterator<Item = [f64; 3]> + '_ {
        self.atoms.iter().map(|a| a.position)
    }
}
