//! On-disk memo of reduced bases, keyed by a SHA-256 of the canonical JSON of
//! `(order, generators)`. A missing or unreadable entry is a miss.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::buchberger::{GroebnerBasis, GroebnerStats};
use super::order::MonomialOrder;
use crate::error::Result;
use crate::polyring::Polynomial;

const CACHE_SCHEMA_VERSION: u32 = 1;

#[derive(Serialize)]
struct KeyMaterial<'a> {
    order: &'a MonomialOrder,
    generators: &'a [Polynomial],
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
struct CacheEntry {
    schema_version: u32,
    order: MonomialOrder,
    basis: Vec<Polynomial>,
    stats: GroebnerStats,
}

#[derive(Debug, Clone)]
pub struct GroebnerCache {
    dir: PathBuf,
}

impl GroebnerCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        GroebnerCache { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn key(generators: &[Polynomial], order: &MonomialOrder) -> String {
        let material = serde_json::to_vec(&KeyMaterial { order, generators })
            .expect("polynomials always serialize");
        hex::encode(Sha256::digest(&material))
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.json"))
    }

    pub fn load(&self, generators: &[Polynomial], order: &MonomialOrder) -> Option<GroebnerBasis> {
        let raw = fs::read(self.path(&Self::key(generators, order))).ok()?;
        let entry: CacheEntry = serde_json::from_slice(&raw).ok()?;
        let stored_order = entry.order.revalidated().ok()?;
        if entry.schema_version != CACHE_SCHEMA_VERSION || stored_order != *order {
            return None;
        }
        Some(GroebnerBasis::from_parts(
            stored_order,
            entry.basis,
            entry.stats,
        ))
    }

    pub fn store(&self, generators: &[Polynomial], gb: &GroebnerBasis) -> Result<()> {
        fs::create_dir_all(&self.dir)?;
        let key = Self::key(generators, gb.order());
        let entry = CacheEntry {
            schema_version: CACHE_SCHEMA_VERSION,
            order: gb.order().clone(),
            basis: gb.basis().to_vec(),
            stats: gb.stats(),
        };
        let target = self.path(&key);
        let tmp = self.dir.join(format!("{key}.{}.tmp", std::process::id()));
        fs::write(&tmp, serde_json::to_vec_pretty(&entry)?)?;
        fs::rename(tmp, target)?;
        Ok(())
    }
}
