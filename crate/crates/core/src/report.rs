//! Serializable records for subgroups and census reports, with conversion
//! back to the library types.

use serde::{Deserialize, Serialize};

use crate::census::{CensusQuery, CensusReport, GroupKind, Verdict};
use crate::error::{Error, Result};
use crate::gfq::Field;
use crate::groups::{close_generators, default_cap, SubgroupPGL2, Tag};
use crate::moebius::{Moebius, PP1};

pub const CENSUS_SCHEMA: &str = "covercensus.census/1";
pub const SUBGROUP_SCHEMA: &str = "covercensus.subgroup/1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubgroupRecord {
    pub field: String,
    pub tag: String,
    pub generators: Vec<String>,
    pub order: u64,
    /// Field the locus points are written in.
    pub locus_field: String,
    pub locus: Vec<String>,
}

impl SubgroupRecord {
    pub fn new(h: &SubgroupPGL2, locus: &[PP1], locus_field: &Field) -> SubgroupRecord {
        SubgroupRecord {
            field: h.field().to_string(),
            tag: h.tag().to_string(),
            generators: h.generators().iter().map(|g| g.to_string()).collect(),
            order: h.order() as u64,
            locus_field: locus_field.to_string(),
            locus: locus.iter().map(|x| x.to_string()).collect(),
        }
    }

    /// Rebuilds the subgroup by closing the generators.
    pub fn to_subgroup(&self) -> Result<SubgroupPGL2> {
        let field = Field::parse(&self.field)?;
        let gens = self
            .generators
            .iter()
            .map(|g| Moebius::parse(&field, g))
            .collect::<Result<Vec<_>>>()?;
        let h = if gens.is_empty() {
            SubgroupPGL2::trivial(&field)
        } else {
            close_generators(&gens, default_cap(&field))?
        };
        if h.order() as u64 != self.order {
            return Err(Error::Parse(format!(
                "generators close to a group of order {}, record says {}",
                h.order(),
                self.order
            )));
        }
        Ok(h.with_tag(Tag::parse(&field, &self.tag)?))
    }

    pub fn locus_points(&self) -> Result<Vec<PP1>> {
        let f = Field::parse(&self.locus_field)?;
        self.locus.iter().map(|x| PP1::parse(&f, x)).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum VerdictRecord {
    Finite { bound: u64 },
    GrowsWithField { counts: Vec<(u32, u64)> },
}

impl From<&Verdict> for VerdictRecord {
    fn from(v: &Verdict) -> Self {
        match v {
            Verdict::Finite { bound } => VerdictRecord::Finite { bound: *bound },
            Verdict::GrowsWithField { counts } => VerdictRecord::GrowsWithField { counts: counts.clone() },
        }
    }
}

impl From<&VerdictRecord> for Verdict {
    fn from(v: &VerdictRecord) -> Self {
        match v {
            VerdictRecord::Finite { bound } => Verdict::Finite { bound: *bound },
            VerdictRecord::GrowsWithField { counts } => Verdict::GrowsWithField { counts: counts.clone() },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRecord {
    pub schema: String,
    pub field: String,
    pub ext: u32,
    pub working_field: String,
    pub group: String,
    pub locus: Vec<String>,
    pub count: u64,
    pub verdict: VerdictRecord,
    pub matches: Vec<SubgroupRecord>,
    pub notes: Vec<String>,
}

impl CensusRecord {
    pub fn new(report: &CensusReport) -> Result<CensusRecord> {
        let q = &report.query;
        let work = q.working_field()?;
        Ok(CensusRecord {
            schema: CENSUS_SCHEMA.into(),
            field: q.field.to_string(),
            ext: q.ext,
            working_field: work.to_string(),
            group: q.group.to_string(),
            locus: q.locus.iter().map(|x| x.to_string()).collect(),
            count: report.count() as u64,
            verdict: (&report.verdict).into(),
            matches: report
                .matches
                .iter()
                .map(|h| SubgroupRecord::new(h, &q.locus, &work))
                .collect(),
            notes: report.notes.clone(),
        })
    }

    pub fn to_report(&self) -> Result<CensusReport> {
        if self.schema != CENSUS_SCHEMA {
            return Err(Error::Parse(format!("unexpected schema {:?}", self.schema)));
        }
        let field = Field::parse(&self.field)?;
        let work = field.extension(self.ext)?;
        let locus = self
            .locus
            .iter()
            .map(|x| PP1::parse(&work, x))
            .collect::<Result<Vec<_>>>()?;
        let group: GroupKind = self.group.parse()?;
        let query = CensusQuery::new(&field, self.ext, group, locus)?;
        let matches = self
            .matches
            .iter()
            .map(SubgroupRecord::to_subgroup)
            .collect::<Result<Vec<_>>>()?;
        if matches.len() as u64 != self.count {
            return Err(Error::Parse("count does not match the number of matches".into()));
        }
        Ok(CensusReport {
            query,
            matches,
            verdict: (&self.verdict).into(),
            notes: self.notes.clone(),
        })
    }
}

/// One CSV row per match.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusCsvRow {
    pub tag: String,
    pub order: u64,
    /// Generators separated by spaces.
    pub generators: String,
    /// Locus points separated by spaces.
    pub locus: String,
}

impl CensusRecord {
    pub fn csv_rows(&self) -> Vec<CensusCsvRow> {
        self.matches
            .iter()
            .map(|m| CensusCsvRow {
                tag: m.tag.clone(),
                order: m.order,
                generators: m.generators.join(" "),
                locus: m.locus.join(" "),
            })
            .collect()
    }
}
