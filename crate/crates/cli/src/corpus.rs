//! Loading `.grp` files and family specs into analysed groups.

use std::fs;
use std::path::{Path, PathBuf};
use std::sync::OnceLock;

use anyhow::{bail, Context, Result};
use cyclic_census_core::catalog::{self, FamilySpec};
use cyclic_census_core::census::{census_by_enumeration, census_by_sum, CensusError};
use cyclic_census_core::coset::coset_enumerate;
use cyclic_census_core::{parse_presentation, to_permutation_group, CyclicCensus, Group, Presentation, Subgroup};
use rayon::prelude::*;
use sha2::{Digest, Sha256};

#[derive(Clone, Debug)]
pub enum Source {
    File(PathBuf),
    Spec(FamilySpec),
}

/// A constructed group together with lazily computed invariants.
pub struct Subject {
    pub name: String,
    pub source: Source,
    pub family: Option<String>,
    pub expected_order: Option<u64>,
    /// Cosets in the completed table, when the group came from enumeration.
    pub cosets: Option<usize>,
    pub group: Group,
    census: OnceLock<Result<CyclicCensus, CensusError>>,
    census_enum: OnceLock<Result<CyclicCensus, CensusError>>,
    maximals: OnceLock<Vec<Subgroup>>,
}

impl Subject {
    fn new(name: String, source: Source, family: Option<String>, expected_order: Option<u64>, cosets: Option<usize>, group: Group) -> Subject {
        Subject {
            name,
            source,
            family,
            expected_order,
            cosets,
            group,
            census: OnceLock::new(),
            census_enum: OnceLock::new(),
            maximals: OnceLock::new(),
        }
    }

    pub fn from_presentation(pres: &Presentation, source: Source, max_cosets: usize) -> Result<Subject> {
        let table = coset_enumerate(pres, &[], max_cosets).with_context(|| format!("enumerating `{}`", pres.name))?;
        let group = to_permutation_group(&table).with_context(|| format!("building `{}`", pres.name))?;
        Ok(Subject::new(
            pres.name.clone(),
            source,
            pres.meta.family.clone(),
            pres.meta.expected_order,
            Some(table.num_cosets()),
            group,
        ))
    }

    pub fn from_spec(spec: &FamilySpec, max_cosets: usize) -> Result<Subject> {
        let group = catalog::build(spec, max_cosets).with_context(|| format!("building `{spec}`"))?;
        let cosets = match spec.family() {
            catalog::Family::Product(_) => None,
            _ => Some(group.order() as usize),
        };
        Ok(Subject::new(
            spec.to_string(),
            Source::Spec(spec.clone()),
            Some(spec.family().key().to_owned()),
            Some(spec.order()),
            cosets,
            group,
        ))
    }

    /// `(p, n)` with `|G| = p^n`, if the group is a p-group.
    pub fn p_n(&self) -> Option<(u64, u32)> {
        self.group.is_p_group()
    }

    pub fn census(&self) -> Result<&CyclicCensus, &CensusError> {
        self.census.get_or_init(|| census_by_sum(&self.group)).as_ref()
    }

    pub fn census_by_enumeration(&self) -> Result<&CyclicCensus, &CensusError> {
        self.census_enum.get_or_init(|| census_by_enumeration(&self.group)).as_ref()
    }

    /// Maximal subgroups; empty for non-p-groups.
    pub fn maximal_subgroups(&self) -> &[Subgroup] {
        self.maximals.get_or_init(|| match self.p_n() {
            Some((p, _)) => self.group.maximal_subgroups(p).unwrap_or_default(),
            None => Vec::new(),
        })
    }

    pub fn is_cyclic(&self) -> bool {
        self.group.exponent() == self.group.order()
    }

    pub fn order_certified(&self) -> bool {
        self.expected_order.is_none_or(|m| m == self.group.order())
    }
}

pub struct Corpus {
    pub sha256: String,
    pub subjects: Vec<Subject>,
}

impl Corpus {
    pub fn empty() -> Corpus {
        Corpus { sha256: hex::encode(Sha256::digest(b"")), subjects: Vec::new() }
    }
}

/// The `.grp` files of a directory, sorted by file name.
pub fn corpus_files(dir: &Path) -> Result<Vec<PathBuf>> {
    let mut files = Vec::new();
    for entry in fs::read_dir(dir).with_context(|| format!("reading corpus directory {}", dir.display()))? {
        let path = entry?.path();
        if path.extension().is_some_and(|e| e == "grp") && path.is_file() {
            files.push(path);
        }
    }
    files.sort_by(|a, b| a.file_name().cmp(&b.file_name()));
    Ok(files)
}

pub fn read_presentation(path: &Path) -> Result<Presentation> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_presentation(&text).map_err(|e| anyhow::anyhow!("{}:{e}", path.display()))
}

pub fn load_corpus(dir: &Path, max_cosets: usize) -> Result<Corpus> {
    let files = corpus_files(dir)?;
    let mut hasher = Sha256::new();
    let mut parsed = Vec::with_capacity(files.len());
    for path in &files {
        let bytes = fs::read(path).with_context(|| format!("reading {}", path.display()))?;
        let name = path.file_name().expect("listed files have names").to_string_lossy();
        hasher.update(name.as_bytes());
        hasher.update([0]);
        hasher.update(&bytes);
        hasher.update([0]);
        let text = String::from_utf8(bytes).with_context(|| format!("{} is not UTF-8", path.display()))?;
        let pres = parse_presentation(&text).map_err(|e| anyhow::anyhow!("{}:{e}", path.display()))?;
        parsed.push((path.clone(), pres));
    }
    let subjects: Vec<Subject> = parsed
        .par_iter()
        .map(|(path, pres)| Subject::from_presentation(pres, Source::File(path.clone()), max_cosets))
        .collect::<Result<_>>()?;
    let mut names: Vec<&str> = subjects.iter().map(|s| s.name.as_str()).collect();
    names.sort_unstable();
    if let Some(w) = names.windows(2).find(|w| w[0] == w[1]) {
        bail!("corpus contains two groups named `{}`", w[0]);
    }
    Ok(Corpus { sha256: hex::encode(hasher.finalize()), subjects })
}

/// A `.grp` path or a family spec string.
pub fn load_subject(arg: &str, max_cosets: usize) -> Result<Subject> {
    let path = Path::new(arg);
    if path.is_file() {
        let pres = read_presentation(path)?;
        return Subject::from_presentation(&pres, Source::File(path.to_owned()), max_cosets);
    }
    match arg.parse::<FamilySpec>() {
        Ok(spec) => Subject::from_spec(&spec, max_cosets),
        Err(e) if arg.ends_with(".grp") || arg.contains('/') => {
            bail!("{arg}: no such file ({e})")
        }
        Err(e) => Err(e.into()),
    }
}
