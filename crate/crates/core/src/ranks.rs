//! Graded rank tables from index tallies.
//!
//! Every generator has odd degree, so the chain complex is lacunary and its
//! differential vanishes; the tally of indices is then the homology.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};

use crate::cz::{cz_lens, cz_link_closed_form};
use crate::dynamics::Family;
use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::geometry::LinkParams;
use crate::lens::LensOrbitKind;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GeneratorFamily {
    Minus,
    Plus,
    Gamma1,
    Gamma2,
}

impl From<Family> for GeneratorFamily {
    fn from(f: Family) -> Self {
        match f {
            Family::Minus => GeneratorFamily::Minus,
            Family::Plus => GeneratorFamily::Plus,
        }
    }
}

impl From<LensOrbitKind> for GeneratorFamily {
    fn from(k: LensOrbitKind) -> Self {
        match k {
            LensOrbitKind::Gamma1 => GeneratorFamily::Gamma1,
            LensOrbitKind::Gamma2 => GeneratorFamily::Gamma2,
        }
    }
}

impl fmt::Display for GeneratorFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GeneratorFamily::Minus => "minus",
            GeneratorFamily::Plus => "plus",
            GeneratorFamily::Gamma1 => "gamma1",
            GeneratorFamily::Gamma2 => "gamma2",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Generator {
    pub family: GeneratorFamily,
    pub iterate: u64,
    pub index: i64,
    /// `N mod (n+1)`.
    pub homotopy_class: u64,
    pub contractible: bool,
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}", self.family, self.iterate)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankTable {
    pub max_degree: i64,
    /// Added to every index to get the degree. Zero reproduces the stated ranks.
    pub degree_shift: i64,
    /// Rank in each degree `0..=max_degree`, zeros included.
    pub ranks: BTreeMap<i64, u64>,
    pub generators: BTreeMap<i64, Vec<Generator>>,
    /// No two generators sit in adjacent degrees.
    pub lacunary: bool,
    /// Smallest index among contractible generators in range, if any.
    pub contractible_min_index: Option<i64>,
}

impl RankTable {
    pub fn rank(&self, degree: i64) -> u64 {
        self.ranks.get(&degree).copied().unwrap_or(0)
    }

    /// Residues `N mod (n+1)` realized by generators in range.
    pub fn homotopy_classes_realized(&self) -> BTreeSet<u64> {
        self.generators.values().flatten().map(|g| g.homotopy_class).collect()
    }

    /// Same ranks in every degree, ignoring which orbits produced them.
    pub fn same_ranks(&self, other: &RankTable) -> bool {
        self.ranks == other.ranks
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("rank table serializes")
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("degree,rank,generators\n");
        for (d, r) in &self.ranks {
            let gens = self.generator_list(*d);
            let _ = writeln!(out, "{d},{r},{gens}");
        }
        out
    }

    pub fn to_markdown(&self) -> String {
        let rows: Vec<(String, String, String)> = self
            .ranks
            .iter()
            .map(|(d, r)| (d.to_string(), r.to_string(), self.generator_list(*d)))
            .collect();
        let w0 = rows.iter().map(|r| r.0.len()).max().unwrap_or(0).max("degree".len());
        let w1 = rows.iter().map(|r| r.1.len()).max().unwrap_or(0).max("rank".len());
        let w2 = rows.iter().map(|r| r.2.len()).max().unwrap_or(0).max("generators".len());
        let mut out = format!("| {:>w0$} | {:>w1$} | {:<w2$} |\n", "degree", "rank", "generators");
        let _ = writeln!(out, "|{}:|{}:|{}|", "-".repeat(w0 + 1), "-".repeat(w1 + 1), "-".repeat(w2 + 2));
        for (d, r, g) in rows {
            let _ = writeln!(out, "| {d:>w0$} | {r:>w1$} | {g:<w2$} |");
        }
        let _ = writeln!(
            out,
            "\nlacunary: {}; contractible min index: {}",
            self.lacunary,
            self.contractible_min_index.map_or("none".into(), |m| m.to_string())
        );
        out
    }

    fn generator_list(&self, degree: i64) -> String {
        self.generators
            .get(&degree)
            .map(|gs| gs.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "))
            .unwrap_or_default()
    }
}

/// Walks `N = 1, 2, …` until the (nondecreasing) index exceeds `limit`.
fn enumerate_family<F>(label: GeneratorFamily, order: u64, limit: i64, index_of: F) -> Result<Vec<Generator>>
where
    F: Fn(u64) -> Result<i64>,
{
    let mut out = Vec::new();
    let mut previous = i64::MIN;
    for iterate in 1u64.. {
        let index = index_of(iterate)?;
        if index < previous {
            return Err(Error::Internal(format!(
                "index of {label}^{iterate} is {index}, below {previous} at the previous iterate"
            )));
        }
        previous = index;
        if index > limit {
            break;
        }
        out.push(Generator {
            family: label,
            iterate,
            index,
            homotopy_class: iterate % order,
            contractible: iterate % order == 0,
        });
    }
    Ok(out)
}

fn assemble(all: Vec<Generator>, max_degree: i64, degree_shift: i64) -> RankTable {
    let occupied: BTreeSet<i64> = all.iter().map(|g| g.index + degree_shift).collect();
    let lacunary = occupied.iter().all(|d| !occupied.contains(&(d + 1)));
    let contractible_min_index = all.iter().filter(|g| g.contractible).map(|g| g.index).min();
    let mut ranks: BTreeMap<i64, u64> = (0..=max_degree).map(|d| (d, 0)).collect();
    let mut generators: BTreeMap<i64, Vec<Generator>> = BTreeMap::new();
    for g in all {
        let degree = g.index + degree_shift;
        if (0..=max_degree).contains(&degree) {
            *ranks.entry(degree).or_default() += 1;
            generators.entry(degree).or_default().push(g);
        }
    }
    for gs in generators.values_mut() {
        gs.sort();
    }
    RankTable { max_degree, degree_shift, ranks, generators, lacunary, contractible_min_index }
}

/// Ranks of the link with degree equal to the index.
pub fn tally_ranks(params: &LinkParams, max_degree: i64) -> Result<RankTable> {
    tally_ranks_with_shift(params, max_degree, 0)
}

/// As [`tally_ranks`], with every degree shifted by `degree_shift`.
pub fn tally_ranks_with_shift(params: &LinkParams, max_degree: i64, degree_shift: i64) -> Result<RankTable> {
    if max_degree < 0 {
        return Err(Error::Domain(format!("degree window must be nonnegative, got {max_degree}")));
    }
    let order = u64::from(params.n()) + 1;
    let limit = max_degree - degree_shift;
    let mut all = Vec::new();
    for family in Family::ALL {
        all.extend(enumerate_family(family.into(), order, limit, |k| cz_link_closed_form(params, family, k))?);
    }
    Ok(assemble(all, max_degree, degree_shift))
}

/// Ranks of `L(n+1, n)` with the form `λ_{a₁,a₂}`.
pub fn lens_orbit_table(n: u32, a1: &Rational, a2: &Rational, max_degree: i64) -> Result<RankTable> {
    if max_degree < 0 {
        return Err(Error::Domain(format!("degree window must be nonnegative, got {max_degree}")));
    }
    let order = u64::from(n) + 1;
    let mut all = Vec::new();
    for kind in LensOrbitKind::ALL {
        all.extend(enumerate_family(kind.into(), order, max_degree, |k| cz_lens(n, a1, a2, kind, k))?);
    }
    Ok(assemble(all, max_degree, 0))
}

/// Rank `n` in degree 1, `n + 1` in each odd degree from 3 on, 0 in even degrees.
pub fn check_thm_pattern(table: &RankTable, n: u32) -> Result<bool> {
    if !table.lacunary {
        return Err(Error::InvalidCertificate("table is not lacunary; ranks need not be homology".into()));
    }
    let n = u64::from(n);
    Ok((0..=table.max_degree).all(|d| {
        let expected = match d {
            1 => n,
            d if d >= 3 && d % 2 == 1 => n + 1,
            _ => 0,
        };
        table.rank(d) == expected
    }))
}

/// `A_n ≅ ℤ_{n+1}` is abelian, so it has `n + 1` conjugacy classes.
pub fn conjugacy_class_count(n: u32) -> Result<u64> {
    if n == 0 {
        return Err(Error::Domain("A_n needs n >= 1".into()));
    }
    Ok(u64::from(n) + 1)
}
