//! Configuration documents: one TOML file carrying the geometry parameters
//! and, optionally, a concentration-region decomposition.
//!
//! ```toml
//! [params]
//! I = 2
//! r0 = 1.0
//! K0 = 1.0
//! H0 = 1.0
//! Cs = 6.2831853071795865
//! A1 = 1.0
//! # c = 1.0            # optional scalar curvature floor
//!
//! [structure]
//! delta = 0.5
//! delta1 = 0.05
//!
//! [[structure.region]]
//! I = 1
//! e = 2
//! m = 2
//! g = 0
//! orientable = true
//! r_F = 0.2
//! kappa = 12.566370614359172
//! ```
//!
//! Every field of `[params]` is optional; omitted keys keep the normalized
//! defaults (`I = 0`, everything else 1, `Cs = 2 pi`). Command-line flags
//! override the file. The default document location can be pinned with the
//! environment variable [`CONFIG_ENV`].

use crate::estimates::{GeometryParams, StructureData};
use crate::{Error, Result};
use std::path::{Path, PathBuf};

/// Environment variable naming the default configuration file.
pub const CONFIG_ENV: &str = "CMC_BOUNDS_CONFIG";

/// Partial parameter set: only the keys present in the file (or given as
/// flags). Applied on top of defaults or another parameter set.
#[derive(Clone, Debug, Default, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct ParamsPatch {
    #[serde(rename = "I", default, skip_serializing_if = "Option::is_none")]
    pub index_bound: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r0: Option<f64>,
    #[serde(rename = "K0", default, skip_serializing_if = "Option::is_none")]
    pub k0: Option<f64>,
    #[serde(rename = "H0", default, skip_serializing_if = "Option::is_none")]
    pub h0: Option<f64>,
    #[serde(rename = "Cs", default, skip_serializing_if = "Option::is_none")]
    pub cs: Option<f64>,
    #[serde(rename = "A1", default, skip_serializing_if = "Option::is_none")]
    pub a1: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c: Option<f64>,
}

impl ParamsPatch {
    pub fn apply(&self, base: &mut GeometryParams) {
        if let Some(i) = self.index_bound {
            base.index_bound = i;
        }
        if let Some(v) = self.r0 {
            base.r0 = v;
        }
        if let Some(v) = self.k0 {
            base.k0 = v;
        }
        if let Some(v) = self.h0 {
            base.h0 = v;
        }
        if let Some(v) = self.cs {
            base.cs = v;
        }
        if let Some(v) = self.a1 {
            base.a1 = v;
        }
        if let Some(v) = self.c {
            base.c = Some(v);
        }
    }
}

/// The whole configuration document.
#[derive(Clone, Debug, Default, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct ConfigDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub params: Option<ParamsPatch>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub structure: Option<StructureData>,
}

impl ConfigDocument {
    pub fn parse(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::parse(format!("configuration: {e}")))
    }

    pub fn from_path(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| {
            Error::parse(format!("cannot read configuration {}: {e}", path.display()))
        })?;
        Self::parse(&text)
    }

    pub fn to_toml(&self) -> Result<String> {
        toml::to_string_pretty(self).map_err(|e| Error::parse(e.to_string()))
    }

    /// Parameters after applying this document on top of the defaults and
    /// `overrides` on top of the document. Validates the result.
    pub fn resolve_params(&self, overrides: &ParamsPatch) -> Result<GeometryParams> {
        let mut params = GeometryParams::new(0);
        if let Some(patch) = &self.params {
            patch.apply(&mut params);
        }
        overrides.apply(&mut params);
        params.validate()?;
        Ok(params)
    }
}

/// Configuration file named by [`CONFIG_ENV`], if the variable is set.
pub fn default_config_path() -> Option<PathBuf> {
    std::env::var_os(CONFIG_ENV).map(PathBuf::from)
}

/// Loads `path` if given, else the [`CONFIG_ENV`] file if set, else the
/// empty document.
pub fn load_config(path: Option<&Path>) -> Result<ConfigDocument> {
    match path.map(Path::to_path_buf).or_else(default_config_path) {
        Some(p) => ConfigDocument::from_path(&p),
        None => Ok(ConfigDocument::default()),
    }
}
