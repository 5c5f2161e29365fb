//! Built-in matrices and the JSON matrix config.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Deserialize;

use super::matrix::QuasiCartanMatrix;
use crate::error::{LrcError, Result};
use crate::exactring::{parse_poly, AlgebraicSpec, MultiPoly, NumberField, PolyRing};

pub const PRESET_NAMES: &[&str] = &["A2", "A3", "A4", "A5", "B2", "G2", "affine-SL2", "H3", "H3-rank2", "dihedral(a,b,n)"];

fn ints(ring: &Arc<PolyRing>, rows: &[&[i64]]) -> Vec<Vec<MultiPoly>> {
    rows.iter().map(|r| r.iter().map(|&x| MultiPoly::from_int(ring, x)).collect()).collect()
}

fn type_a(n: usize) -> Result<QuasiCartanMatrix> {
    let ring = PolyRing::new(NumberField::rational(), n);
    let mut entries = vec![vec![MultiPoly::zero(&ring); n]; n];
    let mut orders = vec![vec![2u32; n]; n];
    for i in 0..n {
        entries[i][i] = MultiPoly::from_int(&ring, 2);
        orders[i][i] = 1;
        if i + 1 < n {
            entries[i][i + 1] = MultiPoly::from_int(&ring, -1);
            entries[i + 1][i] = MultiPoly::from_int(&ring, -1);
            orders[i][i + 1] = 3;
            orders[i + 1][i] = 3;
        }
    }
    QuasiCartanMatrix::new(format!("A{n}"), &ring, entries, orders, true)
}

/// [[2, −a], [−b, 2]] with n_12 = n (0 = ∞). Arguments are polynomial
/// text; mentioning `rho` selects the golden field.
pub fn dihedral(a: &str, b: &str, n: u32, validate: bool) -> Result<QuasiCartanMatrix> {
    let golden = a.contains("rho") || b.contains("rho");
    let field = if golden { NumberField::golden() } else { NumberField::rational() };
    let ring = PolyRing::new(field, 2);
    let pa = parse_poly(&ring, a)?;
    let pb = parse_poly(&ring, b)?;
    let two = MultiPoly::from_int(&ring, 2);
    let entries = vec![vec![two.clone(), -&pa], vec![-&pb, two]];
    QuasiCartanMatrix::new(format!("dihedral({a},{b},{n})"), &ring, entries, vec![vec![1, n], vec![n, 1]], validate)
}

pub fn preset(name: &str) -> Result<QuasiCartanMatrix> {
    preset_with(name, true)
}

pub fn preset_with(name: &str, validate: bool) -> Result<QuasiCartanMatrix> {
    let name = name.trim();
    match name {
        "B2" => {
            let ring = PolyRing::new(NumberField::rational(), 2);
            QuasiCartanMatrix::new("B2", &ring, ints(&ring, &[&[2, -2], &[-1, 2]]), vec![vec![1, 4], vec![4, 1]], validate)
        }
        "G2" => {
            let ring = PolyRing::new(NumberField::rational(), 2);
            QuasiCartanMatrix::new("G2", &ring, ints(&ring, &[&[2, -1], &[-3, 2]]), vec![vec![1, 6], vec![6, 1]], validate)
        }
        "affine-SL2" => {
            let ring = PolyRing::new(NumberField::rational(), 2);
            QuasiCartanMatrix::new("affine-SL2", &ring, ints(&ring, &[&[2, -2], &[-2, 2]]), vec![vec![1, 0], vec![0, 1]], validate)
        }
        "H3" => {
            let ring = PolyRing::new(NumberField::golden(), 3);
            let rows = [["2", "-rho", "0"], ["-rho", "2", "-1"], ["0", "-1", "2"]];
            let entries = rows.iter().map(|r| r.iter().map(|t| parse_poly(&ring, t)).collect()).collect::<Result<_>>()?;
            QuasiCartanMatrix::new("H3", &ring, entries, vec![vec![1, 5, 2], vec![5, 1, 3], vec![2, 3, 1]], validate)
        }
        "H3-rank2" => {
            let mut m = dihedral("rho", "rho", 5, validate)?;
            m.set_name("H3-rank2");
            Ok(m)
        }
        _ => {
            if let Some(n) = name.strip_prefix('A').and_then(|r| r.parse::<usize>().ok()) {
                if (1..=9).contains(&n) {
                    return type_a(n);
                }
            }
            if let Some(args) = name.strip_prefix("dihedral(").and_then(|r| r.strip_suffix(')')) {
                let parts: Vec<&str> = args.split(',').map(str::trim).collect();
                if parts.len() == 3 {
                    let n: u32 = parts[2].parse().map_err(|_| LrcError::UnknownPreset(name.into()))?;
                    return dihedral(parts[0], parts[1], n, validate);
                }
            }
            Err(LrcError::UnknownPreset(name.into()))
        }
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Num {
    Int(i64),
    Text(String),
}

impl Num {
    fn text(&self) -> String {
        match self {
            Num::Int(n) => n.to_string(),
            Num::Text(s) => s.clone(),
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GeneratorConfig {
    name: String,
    min_poly: Vec<i64>,
    root_interval: [Num; 2],
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MatrixConfig {
    rank: usize,
    #[serde(default)]
    generator: Option<GeneratorConfig>,
    matrix: Vec<Vec<Num>>,
    orders: Vec<Vec<u32>>,
    #[serde(default = "default_true")]
    validate: bool,
}

fn default_true() -> bool {
    true
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || LrcError::Config(format!("bad rational `{s}`"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d == BigInt::from(0) {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Reads a matrix config document. `force_no_validate` overrides the
/// document's `validate` flag.
pub fn matrix_from_json(text: &str, name: &str, force_no_validate: bool) -> Result<QuasiCartanMatrix> {
    let cfg: MatrixConfig = serde_json::from_str(text).map_err(|e| LrcError::Config(e.to_string()))?;
    let field = match &cfg.generator {
        None => NumberField::rational(),
        Some(g) => NumberField::new(AlgebraicSpec {
            name: g.name.clone(),
            min_poly: g.min_poly.iter().map(|&c| BigInt::from(c)).collect(),
            root_interval: (parse_rational(&g.root_interval[0].text())?, parse_rational(&g.root_interval[1].text())?),
        })?,
    };
    if cfg.matrix.len() != cfg.rank || cfg.matrix.iter().any(|r| r.len() != cfg.rank) {
        return Err(LrcError::InvalidMatrix(format!("matrix must be {0}x{0}", cfg.rank)));
    }
    let ring = PolyRing::new(field, cfg.rank);
    let entries = cfg
        .matrix
        .iter()
        .map(|r| r.iter().map(|x| parse_poly(&ring, &x.text())).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    QuasiCartanMatrix::new(name, &ring, entries, cfg.orders, cfg.validate && !force_no_validate)
}
