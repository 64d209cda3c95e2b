//! AIM `.wfn` wavefunction files.
//!
//! Reading is token based with fixed-column fallbacks for fields that
//! Fortran writers run together. Both `D` and `E` exponent markers are
//! accepted. Coefficients in the document are stored for normalized
//! primitives; [`PrimitiveConvention`] says how the file stores them.

use std::fmt::Write as _;

use densentropy_core::basis::{primitive_norm, Primitive};
use densentropy_core::density::{DensityMatrix, PairDensityField};
use densentropy_core::molecule::{atomic_number, element_symbol, Atom, Molecule};
use densentropy_core::models::H2Model;

/// Cartesian powers for type codes 1..=20.
pub const TYPE_POWERS: [[u8; 3]; 20] = [
    [0, 0, 0],
    [1, 0, 0],
    [0, 1, 0],
    [0, 0, 1],
    [2, 0, 0],
    [0, 2, 0],
    [0, 0, 2],
    [1, 1, 0],
    [1, 0, 1],
    [0, 1, 1],
    [3, 0, 0],
    [0, 3, 0],
    [0, 0, 3],
    [2, 1, 0],
    [2, 0, 1],
    [0, 2, 1],
    [1, 2, 0],
    [1, 0, 2],
    [0, 1, 2],
    [1, 1, 1],
];

pub fn type_code(powers: [u8; 3]) -> Option<u8> {
    TYPE_POWERS.iter().position(|p| *p == powers).map(|i| i as u8 + 1)
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
#[error("line {line}: {record}: {message}")]
pub struct WfnError {
    pub line: usize,
    pub record: &'static str,
    pub message: String,
}

fn err(line: usize, record: &'static str, message: impl Into<String>) -> WfnError {
    WfnError {
        line,
        record,
        message: message.into(),
    }
}

/// How MO coefficients in the file relate to the primitives.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PrimitiveConvention {
    /// Coefficients multiply bare `x^a y^b z^c e^{-αr²}` (what common
    /// quantum-chemistry programs write).
    #[default]
    Raw,
    /// Coefficients multiply unit-normalized primitives.
    Normalized,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Nucleus {
    pub symbol: String,
    pub atomic_number: u32,
    pub charge: f64,
    pub position: [f64; 3],
}

#[derive(Debug, Clone, PartialEq)]
pub struct MolecularOrbital {
    pub occupation: f64,
    pub energy: f64,
    /// One coefficient per primitive, normalized-primitive convention.
    pub coefficients: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Trailer {
    /// Method label as written, e.g. `HF` or `SCF`.
    pub label: String,
    pub energy: f64,
    pub virial: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct WfnDocument {
    pub title: String,
    /// First token of the count line, e.g. `GAUSSIAN`.
    pub program: String,
    pub nuclei: Vec<Nucleus>,
    /// Zero-based center of each primitive.
    pub prim_center: Vec<usize>,
    pub prim_type: Vec<u8>,
    pub prim_exponent: Vec<f64>,
    pub mos: Vec<MolecularOrbital>,
    pub trailer: Option<Trailer>,
}

fn parse_float(tok: &str) -> Option<f64> {
    let t = tok.trim().replace(['D', 'd'], "E");
    t.parse::<f64>().ok().filter(|x| x.is_finite())
}

/// Splits a run of Fortran reals, including fields written without a
/// separating blank such as `0.1D+01-0.2D+00`.
fn split_reals(s: &str) -> Vec<&str> {
    let bytes = s.as_bytes();
    let mut out = Vec::new();
    let mut start: Option<usize> = None;
    for (i, &c) in bytes.iter().enumerate() {
        if c.is_ascii_whitespace() {
            if let Some(st) = start.take() {
                out.push(&s[st..i]);
            }
            continue;
        }
        let sign = c == b'-' || c == b'+';
        if let Some(st) = start {
            let prev = bytes[i - 1];
            let after_exp = matches!(prev, b'E' | b'e' | b'D' | b'd');
            if sign && !after_exp {
                out.push(&s[st..i]);
                start = Some(i);
            }
        } else {
            start = Some(i);
        }
    }
    if let Some(st) = start {
        out.push(&s[st..]);
    }
    out
}

fn reals(s: &str, line: usize, record: &'static str) -> Result<Vec<f64>, WfnError> {
    split_reals(s)
        .into_iter()
        .map(|t| parse_float(t).ok_or_else(|| err(line, record, format!("malformed number '{t}'"))))
        .collect()
}

// Integers in I3-style fields; runs such as `100101` are split by width.
fn integers(s: &str, width: usize, line: usize, record: &'static str) -> Result<Vec<i64>, WfnError> {
    let toks: Vec<&str> = s.split_whitespace().collect();
    if toks.iter().all(|t| t.len() <= width) {
        return toks
            .iter()
            .map(|t| t.parse().map_err(|_| err(line, record, format!("malformed integer '{t}'"))))
            .collect();
    }
    // fields are right-aligned, so align from the end of the line
    let body = s.trim_end().as_bytes();
    let mut fields: Vec<&[u8]> = body.rchunks(width).collect();
    fields.reverse();
    fields
        .into_iter()
        .map(|c| std::str::from_utf8(c).unwrap_or("?").trim())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse()
                .map_err(|_| err(line, record, format!("malformed integer field '{t}'")))
        })
        .collect()
}

// Text following `key` and an optional '='.
fn after<'a>(line: &'a str, key: &str) -> Option<&'a str> {
    let i = line.find(key)?;
    let rest = line[i + key.len()..].trim_start();
    Some(rest.strip_prefix('=').unwrap_or(rest).trim_start())
}

fn first_real(s: &str) -> Option<f64> {
    split_reals(s).first().and_then(|t| parse_float(t))
}

struct Lines<'a> {
    lines: Vec<&'a str>,
    pos: usize,
}

impl<'a> Lines<'a> {
    fn next(&mut self, record: &'static str) -> Result<(usize, &'a str), WfnError> {
        let l = self
            .lines
            .get(self.pos)
            .ok_or_else(|| err(self.pos + 1, record, "unexpected end of file"))?;
        self.pos += 1;
        Ok((self.pos, l))
    }

    fn peek(&self) -> Option<&'a str> {
        self.lines.get(self.pos).copied()
    }
}

// Reads a labelled list record (possibly continued over several lines)
// until `count` items are collected.
fn labelled<T>(
    lines: &mut Lines<'_>,
    label: &str,
    record: &'static str,
    count: usize,
    mut parse: impl FnMut(&str, usize) -> Result<Vec<T>, WfnError>,
) -> Result<Vec<T>, WfnError> {
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let (no, line) = lines.next(record)?;
        let t = line.trim_start();
        let body = if t.to_ascii_uppercase().starts_with(label) {
            &t[label.len()..]
        } else if out.is_empty() {
            return Err(err(no, record, format!("expected '{label}'")));
        } else {
            return Err(err(no, record, format!("expected {count} entries, found {}", out.len())));
        };
        let mut items = parse(body, no)?;
        if out.len() + items.len() > count {
            return Err(err(no, record, format!("more than the declared {count} entries")));
        }
        out.append(&mut items);
    }
    Ok(out)
}

fn parse_counts(no: usize, line: &str) -> Result<(String, usize, usize, usize), WfnError> {
    let rec = "count line";
    let upper = line.to_ascii_uppercase();
    let grab = |key: &str| -> Result<usize, WfnError> {
        let i = upper
            .find(key)
            .ok_or_else(|| err(no, rec, format!("missing '{key}'")))?;
        upper[..i]
            .split_whitespace()
            .last()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| err(no, rec, format!("missing count before '{key}'")))
    };
    let program = line.split_whitespace().next().unwrap_or("").to_string();
    Ok((program, grab("MOL")?, grab("PRIMITIVES")?, grab("NUCLEI")?))
}

fn parse_nucleus(no: usize, line: &str) -> Result<Nucleus, WfnError> {
    let rec = "nucleus";
    let upper = line.to_ascii_uppercase();
    let close = line
        .find(')')
        .ok_or_else(|| err(no, rec, "missing '(CENTRE n)'"))?;
    let charge_at = upper
        .find("CHARGE")
        .ok_or_else(|| err(no, rec, "missing 'CHARGE ='"))?;
    let charge = after(&upper, "CHARGE")
        .and_then(first_real)
        .ok_or_else(|| err(no, rec, "malformed charge"))?;
    let coord_text = &line[close + 1..charge_at];
    let mut xyz = reals(coord_text, no, rec).ok().filter(|v| v.len() == 3);
    if xyz.is_none() {
        // F12.8 fields
        let t = coord_text.trim_end();
        let fields: Vec<Option<f64>> = t
            .as_bytes()
            .rchunks(12)
            .rev()
            .map(|c| std::str::from_utf8(c).ok().and_then(parse_float))
            .collect();
        if fields.len() >= 3 && fields[fields.len() - 3..].iter().all(Option::is_some) {
            xyz = Some(fields[fields.len() - 3..].iter().map(|x| x.unwrap()).collect());
        }
    }
    let xyz = xyz.ok_or_else(|| err(no, rec, "expected three coordinates"))?;
    let label: String = line[..line.find('(').unwrap_or(close)]
        .split_whitespace()
        .next()
        .unwrap_or("")
        .chars()
        .take_while(|c| c.is_ascii_alphabetic())
        .collect();
    let z = atomic_number(&label)
        .or_else(|| {
            let z = charge.round();
            (z >= 1.0).then_some(z as u32)
        })
        .ok_or_else(|| err(no, rec, format!("unknown element '{label}'")))?;
    let symbol = element_symbol(z).map(str::to_string).unwrap_or(label);
    Ok(Nucleus {
        symbol,
        atomic_number: z,
        charge,
        position: [xyz[0], xyz[1], xyz[2]],
    })
}

fn parse_mo_header(no: usize, line: &str) -> Result<(f64, f64), WfnError> {
    let rec = "MO header";
    let upper = line.to_ascii_uppercase();
    if !upper.trim_start().starts_with("MO") {
        return Err(err(no, rec, "expected 'MO' record"));
    }
    let occ = after(&upper, "OCC NO")
        .and_then(first_real)
        .ok_or_else(|| err(no, rec, "malformed occupation"))?;
    let energy = after(&upper, "ENERGY")
        .and_then(first_real)
        .ok_or_else(|| err(no, rec, "malformed orbital energy"))?;
    if occ < 0.0 {
        return Err(err(no, rec, format!("negative occupation {occ}")));
    }
    Ok((occ, energy))
}

fn parse_trailer(line: &str) -> Option<Trailer> {
    let upper = line.to_ascii_uppercase();
    let i = upper.find("ENERGY")?;
    let label = upper[..i]
        .split_whitespace()
        .rfind(|t| *t != "THE")
        .unwrap_or("")
        .to_string();
    let energy = after(&upper, "ENERGY").and_then(first_real)?;
    let virial = after(&upper, "VIRIAL(-V/T)")
        .or_else(|| after(&upper, "VIRIAL"))
        .and_then(first_real);
    Some(Trailer {
        label,
        energy,
        virial,
    })
}

pub fn parse_wfn(text: &str) -> Result<WfnDocument, WfnError> {
    parse_wfn_with(text, PrimitiveConvention::default())
}

pub fn parse_wfn_with(text: &str, convention: PrimitiveConvention) -> Result<WfnDocument, WfnError> {
    if text.trim().is_empty() {
        return Err(err(1, "title", "empty file"));
    }
    let mut lines = Lines {
        lines: text.lines().collect(),
        pos: 0,
    };
    let (_, title) = lines.next("title")?;
    let (no, counts) = lines.next("count line")?;
    let (program, n_mo, n_prim, n_nuc) = parse_counts(no, counts)?;

    let mut nuclei = Vec::with_capacity(n_nuc);
    for _ in 0..n_nuc {
        let (no, line) = lines.next("nucleus")?;
        nuclei.push(parse_nucleus(no, line)?);
    }

    let prim_center = labelled(&mut lines, "CENTRE ASSIGNMENTS", "centre assignments", n_prim, |s, no| {
        integers(s, 3, no, "centre assignments")?
            .into_iter()
            .map(|c| {
                if c < 1 || c as usize > n_nuc {
                    Err(err(no, "centre assignments", format!("center {c} outside 1..={n_nuc}")))
                } else {
                    Ok(c as usize - 1)
                }
            })
            .collect()
    })?;

    let types = labelled(&mut lines, "TYPE ASSIGNMENTS", "type assignments", n_prim, |s, no| {
        let v = integers(s, 3, no, "type assignments")?;
        if let Some(bad) = v.iter().find(|&&t| !(1..=20).contains(&t)) {
            return Err(err(no, "type assignments", format!("unsupported type code {bad}")));
        }
        Ok(v)
    })?;
    let prim_type: Vec<u8> = types.into_iter().map(|t| t as u8).collect();

    let prim_exponent = labelled(&mut lines, "EXPONENTS", "exponents", n_prim, |s, no| {
        let v = reals(s, no, "exponents")?;
        if let Some(bad) = v.iter().find(|&&e| !(e > 0.0)) {
            return Err(err(no, "exponents", format!("non-positive exponent {bad}")));
        }
        Ok(v)
    })?;

    let norms: Vec<f64> = prim_type
        .iter()
        .zip(&prim_exponent)
        .map(|(&t, &e)| primitive_norm(TYPE_POWERS[t as usize - 1], e))
        .collect();

    let mut mos = Vec::with_capacity(n_mo);
    for _ in 0..n_mo {
        let (no, header) = lines.next("MO header")?;
        let (occupation, energy) = parse_mo_header(no, header)?;
        let mut coefficients = Vec::with_capacity(n_prim);
        while coefficients.len() < n_prim {
            let (no, line) = lines.next("MO coefficients")?;
            let upper = line.trim_start().to_ascii_uppercase();
            if upper.starts_with("MO") || upper.starts_with("END DATA") {
                return Err(err(
                    no,
                    "MO coefficients",
                    format!("truncated MO block: {} of {n_prim} coefficients", coefficients.len()),
                ));
            }
            let mut v = reals(line, no, "MO coefficients")?;
            if coefficients.len() + v.len() > n_prim {
                return Err(err(no, "MO coefficients", format!("more than {n_prim} coefficients")));
            }
            coefficients.append(&mut v);
        }
        if convention == PrimitiveConvention::Raw {
            for (c, n) in coefficients.iter_mut().zip(&norms) {
                *c /= n;
            }
        }
        mos.push(MolecularOrbital {
            occupation,
            energy,
            coefficients,
        });
    }

    let mut trailer = None;
    match lines.next("END DATA") {
        Ok((no, line)) => {
            if !line.trim().to_ascii_uppercase().starts_with("END DATA") {
                return Err(err(no, "END DATA", "expected 'END DATA'"));
            }
            if let Some(l) = lines.peek() {
                trailer = parse_trailer(l);
            }
        }
        Err(e) => return Err(e),
    }

    Ok(WfnDocument {
        title: title.trim_end().to_string(),
        program,
        nuclei,
        prim_center,
        prim_type,
        prim_exponent,
        mos,
        trailer,
    })
}

/// Numeric layout of a written file.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Precision {
    /// Widths used by common writers; about seven significant digits.
    Standard,
    /// Seventeen significant digits, enough for exact round trips.
    #[default]
    Extended,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct WriteOptions {
    pub precision: Precision,
    pub convention: PrimitiveConvention,
}

// Fortran `Dw.d` style: 0.ddddD±ee.
fn fortran_real(x: f64, digits: usize, marker: char) -> String {
    if x == 0.0 {
        return format!("0.{}{marker}+00", "0".repeat(digits));
    }
    let s = format!("{:.*e}", digits - 1, x.abs());
    let (mant, exp) = s.split_once('e').unwrap();
    let exp: i32 = exp.parse().unwrap();
    let digits_only: String = mant.chars().filter(|c| c.is_ascii_digit()).collect();
    let e = exp + 1;
    let sign = if x < 0.0 { "-" } else { "" };
    let esign = if e < 0 { '-' } else { '+' };
    format!("{sign}0.{digits_only}{marker}{esign}{:02}", e.abs())
}

fn write_list<T>(out: &mut String, label: &str, items: &[T], per_line: usize, fmt: impl Fn(&T) -> String) {
    for chunk in items.chunks(per_line) {
        out.push_str(label);
        for it in chunk {
            out.push_str(&fmt(it));
        }
        out.push('\n');
    }
}

pub fn write_wfn(doc: &WfnDocument, options: WriteOptions) -> Result<String, WfnError> {
    let n_prim = doc.prim_exponent.len();
    if doc.prim_center.len() != n_prim || doc.prim_type.len() != n_prim {
        return Err(err(0, "document", "primitive arrays differ in length"));
    }
    if let Some(t) = doc.prim_type.iter().find(|&&t| !(1..=20).contains(&t)) {
        return Err(err(0, "type assignments", format!("unsupported type code {t}")));
    }
    let ext = options.precision == Precision::Extended;
    let mut out = String::new();
    writeln!(out, "{}", doc.title).unwrap();
    let program = if doc.program.is_empty() { "GAUSSIAN" } else { &doc.program };
    writeln!(
        out,
        "{:<16}{:>7} MOL ORBITALS{:>7} PRIMITIVES{:>9} NUCLEI",
        program,
        doc.mos.len(),
        n_prim,
        doc.nuclei.len()
    )
    .unwrap();
    for (i, n) in doc.nuclei.iter().enumerate() {
        let coords: String = if ext {
            n.position.iter().map(|x| format!(" {:>24.17e}", x)).collect()
        } else {
            n.position.iter().map(|x| format!("{:>12.8}", x)).collect()
        };
        let charge = if ext {
            format!("{:.17e}", n.charge)
        } else {
            format!("{:5.1}", n.charge)
        };
        writeln!(out, "  {:<2}{:>4}    (CENTRE{:>3}){coords}  CHARGE = {charge}", n.symbol, i + 1, i + 1).unwrap();
    }
    write_list(&mut out, "CENTRE ASSIGNMENTS  ", &doc.prim_center, 20, |c| format!("{:>3}", c + 1));
    write_list(&mut out, "TYPE ASSIGNMENTS    ", &doc.prim_type, 20, |t| format!("{t:>3}"));
    let (per_line, digits) = if ext { (4, 17) } else { (5, 7) };
    write_list(&mut out, "EXPONENTS ", &doc.prim_exponent, per_line, |e| {
        format!("{:>width$}", fortran_real(*e, digits, 'D'), width = digits + 8)
    });
    let norms: Vec<f64> = doc
        .prim_type
        .iter()
        .zip(&doc.prim_exponent)
        .map(|(&t, &e)| primitive_norm(TYPE_POWERS[t as usize - 1], e))
        .collect();
    let (cper, cdigits) = if ext { (4, 17) } else { (5, 8) };
    for (k, mo) in doc.mos.iter().enumerate() {
        if mo.coefficients.len() != n_prim {
            return Err(err(0, "MO coefficients", format!("MO {} has {} coefficients", k + 1, mo.coefficients.len())));
        }
        if ext {
            writeln!(
                out,
                "MO{:>5}     MO 0.0        OCC NO = {:.17e}  ORB. ENERGY = {:.17e}",
                k + 1,
                mo.occupation,
                mo.energy
            )
            .unwrap();
        } else {
            writeln!(
                out,
                "MO{:>5}     MO 0.0        OCC NO = {:>12.7}  ORB. ENERGY = {:>12.6}",
                k + 1,
                mo.occupation,
                mo.energy
            )
            .unwrap();
        }
        let coeffs: Vec<f64> = match options.convention {
            PrimitiveConvention::Raw => mo.coefficients.iter().zip(&norms).map(|(c, n)| c * n).collect(),
            PrimitiveConvention::Normalized => mo.coefficients.clone(),
        };
        write_list(&mut out, "", &coeffs, cper, |c| {
            format!("{:>width$}", fortran_real(*c, cdigits, 'D'), width = cdigits + 8)
        });
    }
    out.push_str("END DATA\n");
    if let Some(t) = &doc.trailer {
        let virial = t.virial.map(|v| format!(" THE VIRIAL(-V/T)= {v:.17e}")).unwrap_or_default();
        writeln!(out, " THE {} ENERGY = {:.17e}{virial}", t.label, t.energy).unwrap();
    }
    Ok(out)
}

impl WfnDocument {
    pub fn n_electrons(&self) -> f64 {
        self.mos.iter().map(|m| m.occupation).sum()
    }

    pub fn molecule(&self) -> Result<Molecule, densentropy_core::Error> {
        let atoms = self
            .nuclei
            .iter()
            .map(|n| {
                let mut a = Atom::new(&n.symbol, n.position)?;
                a.charge = n.charge;
                Ok(a)
            })
            .collect::<Result<Vec<_>, densentropy_core::Error>>()?;
        Molecule::new(atoms)
    }

    pub fn primitives(&self) -> Result<Vec<Primitive>, densentropy_core::Error> {
        self.prim_center
            .iter()
            .zip(&self.prim_type)
            .zip(&self.prim_exponent)
            .map(|((&c, &t), &e)| Primitive::new(c, TYPE_POWERS[t as usize - 1], e))
            .collect()
    }

    pub fn field(&self) -> Result<PairDensityField, densentropy_core::Error> {
        PairDensityField::new(self.molecule()?, self.primitives()?, density_matrix_from_mos(self)?)
    }

    /// Document for a molecule, its primitives and orbitals over those primitives.
    pub fn from_parts(
        title: &str,
        molecule: &Molecule,
        primitives: &[Primitive],
        mos: Vec<MolecularOrbital>,
    ) -> Result<Self, WfnError> {
        let prim_type = primitives
            .iter()
            .map(|p| {
                type_code(p.powers).ok_or_else(|| {
                    err(0, "type assignments", format!("unsupported angular momentum {}", p.angular_momentum()))
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self {
            title: title.to_string(),
            program: "GAUSSIAN".into(),
            nuclei: molecule
                .atoms()
                .iter()
                .map(|a| Nucleus {
                    symbol: a.symbol.to_string(),
                    atomic_number: a.atomic_number,
                    charge: a.charge,
                    position: a.position,
                })
                .collect(),
            prim_center: primitives.iter().map(|p| p.center).collect(),
            prim_type,
            prim_exponent: primitives.iter().map(|p| p.exponent).collect(),
            mos,
            trailer: None,
        })
    }

    /// Natural-orbital document reproducing a model's density.
    pub fn from_model(model: &H2Model) -> Result<Self, densentropy_core::Error> {
        let prims = model.primitives();
        let d = &model.basis.coefficients;
        let mos = model
            .natural_orbitals()
            .iter()
            .filter(|(occ, _)| *occ > 0.0)
            .map(|(occ, c)| MolecularOrbital {
                occupation: *occ,
                energy: 0.0,
                coefficients: c.iter().flat_map(|ca| d.iter().map(move |di| ca * di)).collect(),
            })
            .collect();
        let title = format!("{} {} R = {} bohr", model.symbol, model.method.name().to_uppercase(), model.distance);
        let mut doc = Self::from_parts(&title, &model.molecule()?, &prims, mos)
            .expect("s primitives always have a type code");
        doc.trailer = Some(Trailer {
            label: model.method.name().to_uppercase(),
            energy: model.energy()?,
            virial: None,
        });
        Ok(doc)
    }
}

/// `c_ij = Σ_k n_k C_ki C_kj`, skipping unoccupied orbitals.
pub fn density_matrix_from_mos(doc: &WfnDocument) -> Result<DensityMatrix, densentropy_core::Error> {
    let n = doc.prim_exponent.len();
    let mut c = vec![0.0; n * n];
    for mo in &doc.mos {
        if mo.occupation < 0.0 {
            return Err(densentropy_core::Error::InvalidArgument {
                what: "occupation",
                value: mo.occupation,
            });
        }
        if mo.occupation == 0.0 {
            continue;
        }
        for i in 0..n {
            let a = mo.occupation * mo.coefficients[i];
            if a == 0.0 {
                continue;
            }
            for j in 0..n {
                c[i * n + j] += a * mo.coefficients[j];
            }
        }
    }
    DensityMatrix::new(n, c, doc.n_electrons())
}
