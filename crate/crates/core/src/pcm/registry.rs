//! The catalog of parameter control methods: metadata, default
//! hyperparameters, validation, and construction by id.

use super::{
    Cde, Cobide, Code, Dedps, Depd, Dersf, Detvsf, Epsde, Fdsade, FixedF05C09, Ide, Imde, Isade,
    Jade, Jde, ParameterControl, Rde, Sade, Sansde, Sde, Shade, Sinde, Slade, Swde, Zmde,
};
use crate::error::{Error, Result};
use std::collections::BTreeMap;

/// Hyperparameter overrides keyed by name.
pub type HyperMap = BTreeMap<String, f64>;

/// Top-level category of a method.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PcmClass {
    /// The fixed-parameter reference configuration.
    Baseline,
    Deterministic,
    Adaptive,
    SelfAdaptive,
}

impl PcmClass {
    pub fn label(&self) -> &'static str {
        match self {
            PcmClass::Baseline => "BASE",
            PcmClass::Deterministic => "DPCM",
            PcmClass::Adaptive => "APCM",
            PcmClass::SelfAdaptive => "SPCM",
        }
    }
}

/// Allowed range and default of one hyperparameter.
#[derive(Debug, Clone, Copy)]
pub struct HyperSpec {
    pub name: &'static str,
    pub default: f64,
    pub lo: f64,
    pub hi: f64,
}

const fn hyper(name: &'static str, default: f64, lo: f64, hi: f64) -> HyperSpec {
    HyperSpec { name, default, lo, hi }
}

/// Static metadata for one method, including the taxonomy columns:
/// success/observation based, continuous/discrete values, single/multiple
/// values per generation, information source, and parameter inheritance.
#[derive(Debug, Clone)]
pub struct PcmDescriptor {
    pub id: &'static str,
    pub name: &'static str,
    pub class: PcmClass,
    /// How F is controlled: a class label or a fixed value.
    pub f_control: &'static str,
    /// How C is controlled: a class label or a fixed value.
    pub c_control: &'static str,
    /// "S", "O", "S&O", or "" for non-adaptive methods.
    pub success_observation: &'static str,
    /// "C" continuous or "D" discrete parameter values.
    pub value_type: &'static str,
    /// "S" single or "M" multiple values per generation.
    pub cardinality: &'static str,
    /// "N" none, "T" time, "P" population distribution, "H" history.
    pub info: &'static str,
    pub inheritance: bool,
    /// Time-schedule methods lose their schedule on restart and are excluded
    /// from restart-enabled experiments.
    pub restart_compatible: bool,
    pub hypers: &'static [HyperSpec],
}

impl PcmDescriptor {
    /// Default hyperparameters as a map.
    pub fn defaults(&self) -> HyperMap {
        self.hypers
            .iter()
            .map(|h| (h.name.to_string(), h.default))
            .collect()
    }

    /// Merges overrides onto defaults, rejecting unknown names and
    /// out-of-range values.
    pub fn resolve(&self, overrides: &HyperMap) -> Result<HyperMap> {
        let mut resolved = self.defaults();
        for (name, &value) in overrides {
            let spec = self
                .hypers
                .iter()
                .find(|h| h.name == name)
                .ok_or_else(|| Error::UnknownHyperparameter {
                    method: self.id.to_string(),
                    name: name.clone(),
                })?;
            if !(spec.lo..=spec.hi).contains(&value) || !value.is_finite() {
                return Err(Error::HyperparameterOutOfRange {
                    method: self.id.to_string(),
                    name: name.clone(),
                    value,
                    range: format!("[{}, {}]", spec.lo, spec.hi),
                });
            }
            resolved.insert(name.clone(), value);
        }
        Ok(resolved)
    }
}

const RANGE_HYPERS_RDE: &[HyperSpec] = &[
    hyper("f_min", 0.6, 0.0, 1.0),
    hyper("f_max", 0.95, 0.0, 1.0),
    hyper("c_min", 0.85, 0.0, 1.0),
    hyper("c_max", 0.95, 0.0, 1.0),
];

static REGISTRY: &[PcmDescriptor] = &[
    PcmDescriptor {
        id: "f05c09",
        name: "F05C09",
        class: PcmClass::Baseline,
        f_control: "0.5",
        c_control: "0.9",
        success_observation: "",
        value_type: "C",
        cardinality: "S",
        info: "N",
        inheritance: false,
        restart_compatible: true,
        hypers: &[hyper("f", 0.5, 0.0, 2.0), hyper("c", 0.9, 0.0, 1.0)],
    },
    PcmDescriptor {
        id: "dersf",
        name: "PCM-DERSF",
        class: PcmClass::Deterministic,
        f_control: "DPCM",
        c_control: "0.9",
        success_observation: "",
        value_type: "C",
        cardinality: "M",
        info: "N",
        inheritance: false,
        restart_compatible: true,
        hypers: &[
            hyper("f_min", 0.5, 0.0, 1.0),
            hyper("f_max", 1.0, 0.0, 1.0),
            hyper("c", 0.9, 0.0, 1.0),
        ],
    },
    PcmDescriptor {
        id: "detvsf",
        name: "PCM-DETVSF",
        class: PcmClass::Deterministic,
        f_control: "DPCM",
        c_control: "0.9",
        success_observation: "",
        value_type: "C",
        cardinality: "S",
        info: "T",
        inheritance: false,
        restart_compatible: false,
        hypers: &[
            hyper("f_min", 0.4, 0.0, 2.0),
            hyper("f_max", 1.2, 0.0, 2.0),
            hyper("c", 0.9, 0.0, 1.0),
        ],
    },
    PcmDescriptor {
        id: "code",
        name: "PCM-CoDE",
        class: PcmClass::Deterministic,
        f_control: "DPCM",
        c_control: "DPCM",
        success_observation: "",
        value_type: "D",
        cardinality: "M",
        info: "N",
        inheritance: false,
        restart_compatible: true,
        hypers: &[],
    },
    PcmDescriptor {
        id: "zmde",
        name: "PCM-ZMDE",
        class: PcmClass::Deterministic,
        f_control: "DPCM",
        c_control: "DPCM",
        success_observation: "",
        value_type: "C",
        cardinality: "M",
        info: "N",
        inheritance: false,
        restart_compatible: true,
        hypers: &[],
    },
    PcmDescriptor {
        id: "sinde",
        name: "PCM-SinDE",
        class: PcmClass::Deterministic,
        f_control: "DPCM",
        c_control: "DPCM",
        success_observation: "",
        value_type: "C",
        cardinality: "S",
        info: "T",
        inheritance: false,
        restart_compatible: false,
        hypers: &[hyper("omega", 0.25, 1e-9, 1e3)],
    },
    PcmDescriptor {
        id: "swde",
        name: "PCM-SWDE",
        class: PcmClass::Deterministic,
        f_control: "DPCM",
        c_control: "DPCM",
        success_observation: "",
        value_type: "D",
        cardinality: "M",
        info: "N",
        inheritance: false,
        restart_compatible: true,
        hypers: &[],
    },
    PcmDescriptor {
        id: "depd",
        name: "PCM-DEPD",
        class: PcmClass::Adaptive,
        f_control: "APCM",
        c_control: "0.5",
        success_observation: "O",
        value_type: "C",
        cardinality: "S",
        info: "P",
        inheritance: false,
        restart_compatible: true,
        hypers: &[hyper("f_floor", 0.4, 0.0, 1.0), hyper("c", 0.5, 0.0, 1.0)],
    },
    PcmDescriptor {
        id: "jde",
        name: "PCM-jDE",
        class: PcmClass::Adaptive,
        f_control: "APCM",
        c_control: "APCM",
        success_observation: "S",
        value_type: "C",
        cardinality: "M",
        info: "N",
        inheritance: true,
        restart_compatible: true,
        hypers: &[hyper("tau_f", 0.1, 0.0, 1.0), hyper("tau_c", 0.1, 0.0, 1.0)],
    },
    PcmDescriptor {
        id: "cde",
        name: "PCM-cDE",
        class: PcmClass::Adaptive,
        f_control: "APCM",
        c_control: "APCM",
        success_observation: "S",
        value_type: "D",
        cardinality: "M",
        info: "H",
        inheritance: false,
        restart_compatible: true,
        hypers: &[hyper("n0", 2.0, 1e-9, 1e6), hyper("delta", 1.0 / 45.0, 0.0, 1.0)],
    },
    PcmDescriptor {
        id: "sansde",
        name: "PCM-SaNSDE",
        class: PcmClass::Adaptive,
        f_control: "APCM",
        c_control: "APCM",
        success_observation: "S",
        value_type: "C",
        cardinality: "M",
        info: "H",
        inheritance: false,
        restart_compatible: true,
        hypers: &[hyper("t_learn", 50.0, 1.0, 1e6)],
    },
    PcmDescriptor {
        id: "fdsade",
        name: "PCM-FDSADE",
        class: PcmClass::Adaptive,
        f_control: "APCM",
        c_control: "APCM",
        success_observation: "S&O",
        value_type: "C",
        cardinality: "M",
        info: "P",
        inheritance: true,
        restart_compatible: true,
        hypers: &[hyper("k", 0.3, 0.0, 1.0)],
    },
    PcmDescriptor {
        id: "isade",
        name: "PCM-ISADE",
        class: PcmClass::Adaptive,
        f_control: "APCM",
        c_control: "APCM",
        success_observation: "S&O",
        value_type: "C",
        cardinality: "M",
        info: "P",
        inheritance: true,
        restart_compatible: true,
        hypers: &[hyper("tau_f", 0.1, 0.0, 1.0), hyper("tau_c", 0.1, 0.0, 1.0)],
    },
    PcmDescriptor {
        id: "sade",
        name: "PCM-SaDE",
        class: PcmClass::Adaptive,
        f_control: "DPCM",
        c_control: "APCM",
        success_observation: "S",
        value_type: "C",
        cardinality: "M",
        info: "H",
        inheritance: false,
        restart_compatible: true,
        hypers: &[hyper("t_learn", 50.0, 1.0, 1e6)],
    },
    PcmDescriptor {
        id: "jade",
        name: "PCM-JADE",
        class: PcmClass::Adaptive,
        f_control: "APCM",
        c_control: "APCM",
        success_observation: "S",
        value_type: "C",
        cardinality: "M",
        info: "H",
        inheritance: false,
        restart_compatible: true,
        hypers: &[hyper("c", 0.1, 0.0, 1.0)],
    },
    PcmDescriptor {
        id: "epsde",
        name: "PCM-EPSDE",
        class: PcmClass::Adaptive,
        f_control: "APCM",
        c_control: "APCM",
        success_observation: "S",
        value_type: "D",
        cardinality: "M",
        info: "N",
        inheritance: true,
        restart_compatible: true,
        hypers: &[],
    },
    PcmDescriptor {
        id: "rde",
        name: "PCM-RDE",
        class: PcmClass::Adaptive,
        f_control: "APCM",
        c_control: "APCM",
        success_observation: "O",
        value_type: "C",
        cardinality: "M",
        info: "P",
        inheritance: false,
        restart_compatible: true,
        hypers: RANGE_HYPERS_RDE,
    },
    PcmDescriptor {
        id: "imde",
        name: "PCM-IMDE",
        class: PcmClass::Adaptive,
        f_control: "APCM",
        c_control: "APCM",
        success_observation: "S",
        value_type: "C",
        cardinality: "M",
        info: "H",
        inheritance: false,
        restart_compatible: true,
        hypers: &[],
    },
    PcmDescriptor {
        id: "shade",
        name: "PCM-SHADE",
        class: PcmClass::Adaptive,
        f_control: "APCM",
        c_control: "APCM",
        success_observation: "S",
        value_type: "C",
        cardinality: "M",
        info: "H",
        inheritance: false,
        restart_compatible: true,
        hypers: &[hyper("h", 5.0, 1.0, 1e6)],
    },
    PcmDescriptor {
        id: "dedps",
        name: "PCM-DEDPS",
        class: PcmClass::Adaptive,
        f_control: "APCM",
        c_control: "APCM",
        success_observation: "S",
        value_type: "D",
        cardinality: "M",
        info: "H",
        inheritance: false,
        restart_compatible: true,
        hypers: &[
            hyper("t_cs1", 50.0, 1.0, 1e9),
            hyper("t_cs2", 100.0, 1.0, 1e9),
            hyper("t_cs3", 150.0, 1.0, 1e9),
            hyper("t_cs4", 200.0, 1.0, 1e9),
        ],
    },
    PcmDescriptor {
        id: "cobide",
        name: "PCM-CoBiDE",
        class: PcmClass::Adaptive,
        f_control: "APCM",
        c_control: "APCM",
        success_observation: "S",
        value_type: "C",
        cardinality: "M",
        info: "N",
        inheritance: true,
        restart_compatible: true,
        hypers: &[],
    },
    PcmDescriptor {
        id: "ide",
        name: "PCM-IDE",
        class: PcmClass::Adaptive,
        f_control: "APCM",
        c_control: "APCM",
        success_observation: "O",
        value_type: "C",
        cardinality: "M",
        info: "P",
        inheritance: false,
        restart_compatible: true,
        hypers: &[],
    },
    PcmDescriptor {
        id: "slade",
        name: "PCM-SLADE",
        class: PcmClass::Adaptive,
        f_control: "APCM",
        c_control: "APCM",
        success_observation: "S",
        value_type: "C",
        cardinality: "M",
        info: "H",
        inheritance: false,
        restart_compatible: true,
        hypers: &[hyper("c", 0.1, 0.0, 1.0)],
    },
    PcmDescriptor {
        id: "sde",
        name: "PCM-SDE",
        class: PcmClass::SelfAdaptive,
        f_control: "SPCM",
        c_control: "0.5",
        success_observation: "S",
        value_type: "C",
        cardinality: "M",
        info: "P",
        inheritance: true,
        restart_compatible: true,
        hypers: &[],
    },
];

/// All method descriptors, baseline first.
pub fn registry() -> &'static [PcmDescriptor] {
    REGISTRY
}

/// All method ids in registry order.
pub fn pcm_ids() -> Vec<&'static str> {
    REGISTRY.iter().map(|d| d.id).collect()
}

/// Looks up one descriptor by id.
pub fn pcm_descriptor(id: &str) -> Result<&'static PcmDescriptor> {
    REGISTRY
        .iter()
        .find(|d| d.id == id)
        .ok_or_else(|| Error::UnknownPcm(id.to_string()))
}

fn get(h: &HyperMap, name: &str) -> f64 {
    h[name]
}

fn ordered(h: &HyperMap, lo: &str, hi: &str, pcm: &str) -> Result<()> {
    if get(h, lo) > get(h, hi) {
        return Err(Error::InvalidConfig(format!(
            "{pcm}: {lo} must not exceed {hi}"
        )));
    }
    Ok(())
}

/// Builds a method by id with hyperparameter overrides applied on top of
/// the documented defaults.
pub fn create_pcm(id: &str, overrides: &HyperMap) -> Result<Box<dyn ParameterControl>> {
    let descriptor = pcm_descriptor(id)?;
    let h = descriptor.resolve(overrides)?;
    let pcm: Box<dyn ParameterControl> = match id {
        "f05c09" => Box::new(FixedF05C09 { f: get(&h, "f"), c: get(&h, "c") }),
        "dersf" => {
            ordered(&h, "f_min", "f_max", id)?;
            Box::new(Dersf { f_min: get(&h, "f_min"), f_max: get(&h, "f_max"), c: get(&h, "c") })
        }
        "detvsf" => {
            ordered(&h, "f_min", "f_max", id)?;
            Box::new(Detvsf {
                f_min: get(&h, "f_min"),
                f_max: get(&h, "f_max"),
                c: get(&h, "c"),
                ..Detvsf::default()
            })
        }
        "code" => Box::new(Code),
        "zmde" => Box::new(Zmde),
        "sinde" => Box::new(Sinde { omega: get(&h, "omega"), ..Sinde::default() }),
        "swde" => Box::new(Swde),
        "depd" => Box::new(Depd {
            f_floor: get(&h, "f_floor"),
            c: get(&h, "c"),
            ..Depd::default()
        }),
        "jde" => Box::new(Jde { tau_f: get(&h, "tau_f"), tau_c: get(&h, "tau_c"), ..Jde::default() }),
        "cde" => Box::new(Cde { n0: get(&h, "n0"), delta: get(&h, "delta"), ..Cde::default() }),
        "sansde" => Box::new(Sansde { t_learn: get(&h, "t_learn") as usize, ..Sansde::default() }),
        "fdsade" => Box::new(Fdsade { k: get(&h, "k"), ..Fdsade::default() }),
        "isade" => Box::new(Isade {
            tau_f: get(&h, "tau_f"),
            tau_c: get(&h, "tau_c"),
            ..Isade::default()
        }),
        "sade" => Box::new(Sade { t_learn: get(&h, "t_learn") as usize, ..Sade::default() }),
        "jade" => Box::new(Jade { c: get(&h, "c"), ..Jade::default() }),
        "epsde" => Box::new(Epsde::default()),
        "rde" => {
            ordered(&h, "f_min", "f_max", id)?;
            ordered(&h, "c_min", "c_max", id)?;
            Box::new(Rde {
                f_min: get(&h, "f_min"),
                f_max: get(&h, "f_max"),
                c_min: get(&h, "c_min"),
                c_max: get(&h, "c_max"),
            })
        }
        "imde" => Box::new(Imde::default()),
        "shade" => Box::new(Shade::with_memory(get(&h, "h") as usize)),
        "dedps" => {
            let mut checkpoints: Vec<usize> = ["t_cs1", "t_cs2", "t_cs3", "t_cs4"]
                .iter()
                .map(|name| get(&h, name) as usize)
                .collect();
            checkpoints.sort();
            checkpoints.dedup();
            Box::new(Dedps { checkpoints, ..Dedps::default() })
        }
        "cobide" => Box::new(Cobide::default()),
        "ide" => Box::new(Ide),
        "slade" => Box::new(Slade { c: get(&h, "c"), ..Slade::default() }),
        "sde" => Box::new(Sde::default()),
        _ => unreachable!("descriptor lookup covers all ids"),
    };
    Ok(pcm)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_has_baseline_plus_catalog() {
        assert_eq!(registry().len(), 24);
        assert_eq!(registry()[0].id, "f05c09");
        let ids = pcm_ids();
        let unique: std::collections::HashSet<_> = ids.iter().collect();
        assert_eq!(unique.len(), ids.len());
    }

    #[test]
    fn every_method_constructs_with_defaults() {
        for id in pcm_ids() {
            create_pcm(id, &HyperMap::new()).expect(id);
        }
    }

    #[test]
    fn shade_row_metadata() {
        let d = pcm_descriptor("shade").unwrap();
        assert_eq!(d.class.label(), "APCM");
        assert_eq!(d.success_observation, "S");
        assert_eq!(d.value_type, "C");
        assert_eq!(d.cardinality, "M");
        assert_eq!(d.info, "H");
        assert!(!d.inheritance);
    }

    #[test]
    fn sde_row_metadata() {
        let d = pcm_descriptor("sde").unwrap();
        assert_eq!(d.class.label(), "SPCM");
        assert!(d.inheritance);
    }

    #[test]
    fn schedule_methods_are_restart_incompatible() {
        assert!(!pcm_descriptor("sinde").unwrap().restart_compatible);
        assert!(!pcm_descriptor("detvsf").unwrap().restart_compatible);
        let compatible = registry().iter().filter(|d| d.restart_compatible).count();
        assert_eq!(compatible, 22);
    }

    #[test]
    fn unknown_ids_and_hypers_rejected() {
        assert!(pcm_descriptor("nope").is_err());
        let mut overrides = HyperMap::new();
        overrides.insert("bogus".into(), 1.0);
        assert!(create_pcm("jade", &overrides).is_err());
        let mut overrides = HyperMap::new();
        overrides.insert("c".into(), 1.5);
        assert!(create_pcm("jade", &overrides).is_err());
        let mut overrides = HyperMap::new();
        overrides.insert("c".into(), 0.2);
        assert!(create_pcm("jade", &overrides).is_ok());
    }

    #[test]
    fn cross_field_ranges_validated() {
        let mut overrides = HyperMap::new();
        overrides.insert("f_min".into(), 0.9);
        overrides.insert("f_max".into(), 0.7);
        assert!(create_pcm("rde", &overrides).is_err());
    }
}
