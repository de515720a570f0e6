//! Instance configuration files.
//!
//! ```json
//! { "name": "...", "p": 2, "basis": ["1", "t"], "mul": [[i, j, k, c], ...],
//!   "unit": [c, ...], "ideal": [[c, ...], ...],
//!   "options": { "dim_bound": 3, "cap": 1000000, "seed": 0, "samples": 100 } }
//! ```
//!
//! Coefficients are integers reduced mod `p`. `options` and each of its
//! fields may be omitted.

use std::path::{Path, PathBuf};

use devissage::algebra::{AlgebraTable, Ideal};
use devissage::field::FiniteField;
use devissage::instance::Instance;
use devissage::lattice::DEFAULT_CAP;
use devissage::{F2, F3, F5, F7};
use serde_json::{Map, Value};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("parse error at line {line}, column {column}: {message}")]
    ParseError { line: usize, column: usize, message: String },
    #[error("schema violation in `{field}`: {reason}")]
    SchemaViolation { field: String, reason: String },
    #[error("invalid algebra: {0}")]
    AlgebraInvalid(#[source] devissage::Error),
    #[error("invalid ideal: {0}")]
    IdealInvalid(#[source] devissage::Error),
}

impl ConfigError {
    fn schema(field: &str, reason: impl Into<String>) -> Self {
        ConfigError::SchemaViolation { field: field.to_string(), reason: reason.into() }
    }
}

/// Characteristics the binary is compiled for.
pub const SUPPORTED_P: [u64; 4] = [2, 3, 5, 7];

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Options {
    pub dim_bound: Option<usize>,
    pub cap: Option<u64>,
    pub seed: Option<u64>,
    pub samples: Option<usize>,
}

/// A parsed configuration whose algebra and ideal have been validated.
#[derive(Debug)]
pub struct InstanceConfig {
    pub name: String,
    pub p: u64,
    pub basis: Vec<String>,
    pub mul: Vec<Product>,
    pub unit: Vec<i64>,
    pub ideal: Vec<Vec<i64>>,
    pub options: Options,
    instance: AnyInstance,
}

/// An instance over one of the supported prime fields.
#[derive(Debug)]
pub enum AnyInstance {
    F2(Instance<F2>),
    F3(Instance<F3>),
    F5(Instance<F5>),
    F7(Instance<F7>),
}

/// Evaluate `$body` with `$inst` bound to the concrete `&Instance<Fp<p>>`.
#[macro_export]
macro_rules! with_instance {
    ($any:expr, $inst:ident => $body:expr) => {
        match $any {
            $crate::config::AnyInstance::F2($inst) => $body,
            $crate::config::AnyInstance::F3($inst) => $body,
            $crate::config::AnyInstance::F5($inst) => $body,
            $crate::config::AnyInstance::F7($inst) => $body,
        }
    };
}

impl AnyInstance {
    pub fn algebra_dim(&self) -> usize {
        with_instance!(self, inst => inst.algebra().dim())
    }
}

impl InstanceConfig {
    pub fn instance(&self) -> &AnyInstance {
        &self.instance
    }

    pub fn into_instance(self) -> AnyInstance {
        self.instance
    }

    pub fn cap(&self) -> u64 {
        self.options.cap.unwrap_or(DEFAULT_CAP)
    }

    /// Rebuild the instance with a different enumeration budget.
    pub fn with_cap(mut self, cap: u64) -> Result<Self, ConfigError> {
        self.options.cap = Some(cap);
        self.instance = build(self.p, &self.basis, &self.mul, &self.unit, &self.ideal, cap)?;
        Ok(self)
    }
}

pub fn parse_config(path: impl AsRef<Path>) -> Result<InstanceConfig, ConfigError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Io { path: path.to_path_buf(), source })?;
    parse_config_str(&text)
}

pub fn parse_config_str(text: &str) -> Result<InstanceConfig, ConfigError> {
    let value: Value = serde_json::from_str(text).map_err(|e| ConfigError::ParseError {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let obj = value.as_object().ok_or_else(|| ConfigError::schema("<root>", "expected an object"))?;

    let name = required(obj, "name")?.as_str().ok_or_else(|| ConfigError::schema("name", "expected a string"))?;
    let p = as_u64(required(obj, "p")?, "p")?;
    let basis = required(obj, "basis")?
        .as_array()
        .ok_or_else(|| ConfigError::schema("basis", "expected an array of labels"))?
        .iter()
        .map(|v| v.as_str().map(str::to_string).ok_or_else(|| ConfigError::schema("basis", "labels must be strings")))
        .collect::<Result<Vec<_>, _>>()?;
    let mul = array_of(required(obj, "mul")?, "mul")?
        .iter()
        .map(|row| {
            let q = int_vector(row, "mul")?;
            match q.as_slice() {
                &[i, j, k, c] if i >= 0 && j >= 0 && k >= 0 => Ok((i as usize, j as usize, k as usize, c)),
                _ => Err(ConfigError::schema("mul", "entries are [i, j, k, c] with nonnegative indices")),
            }
        })
        .collect::<Result<Vec<_>, _>>()?;
    let unit = int_vector(required(obj, "unit")?, "unit")?;
    let ideal = array_of(required(obj, "ideal")?, "ideal")?
        .iter()
        .map(|v| int_vector(v, "ideal"))
        .collect::<Result<Vec<_>, _>>()?;
    let options = match obj.get("options") {
        None | Some(Value::Null) => Options::default(),
        Some(Value::Object(o)) => Options {
            dim_bound: optional_u64(o, "dim_bound")?.map(|n| n as usize),
            cap: optional_u64(o, "cap")?,
            seed: optional_u64(o, "seed")?,
            samples: optional_u64(o, "samples")?.map(|n| n as usize),
        },
        Some(_) => return Err(ConfigError::schema("options", "expected an object")),
    };

    let instance = build(p, &basis, &mul, &unit, &ideal, options.cap.unwrap_or(DEFAULT_CAP))?;
    Ok(InstanceConfig { name: name.to_string(), p, basis, mul, unit, ideal, options, instance })
}

fn required<'a>(obj: &'a Map<String, Value>, key: &str) -> Result<&'a Value, ConfigError> {
    obj.get(key).ok_or_else(|| ConfigError::schema(key, "missing"))
}

fn as_u64(v: &Value, field: &str) -> Result<u64, ConfigError> {
    v.as_u64().ok_or_else(|| ConfigError::schema(field, "expected a nonnegative integer"))
}

fn optional_u64(obj: &Map<String, Value>, key: &str) -> Result<Option<u64>, ConfigError> {
    match obj.get(key) {
        None | Some(Value::Null) => Ok(None),
        Some(v) => as_u64(v, &format!("options.{key}")).map(Some),
    }
}

fn array_of<'a>(v: &'a Value, field: &str) -> Result<&'a Vec<Value>, ConfigError> {
    v.as_array().ok_or_else(|| ConfigError::schema(field, "expected an array"))
}

fn int_vector(v: &Value, field: &str) -> Result<Vec<i64>, ConfigError> {
    array_of(v, field)?
        .iter()
        .map(|c| c.as_i64().ok_or_else(|| ConfigError::schema(field, "expected integers")))
        .collect()
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// A sparse structure constant `(i, j, k, c)`: `b_i b_j` has `c` on `b_k`.
pub type Product = (usize, usize, usize, i64);

fn build(
    p: u64,
    basis: &[String],
    mul: &[Product],
    unit: &[i64],
    ideal: &[Vec<i64>],
    cap: u64,
) -> Result<AnyInstance, ConfigError> {
    Ok(match p {
        2 => AnyInstance::F2(build_over(basis, mul, unit, ideal, cap)?),
        3 => AnyInstance::F3(build_over(basis, mul, unit, ideal, cap)?),
        5 => AnyInstance::F5(build_over(basis, mul, unit, ideal, cap)?),
        7 => AnyInstance::F7(build_over(basis, mul, unit, ideal, cap)?),
        p if !is_prime(p) => return Err(ConfigError::AlgebraInvalid(devissage::Error::NotPrimeCharacteristic(p))),
        _ => return Err(ConfigError::schema("p", format!("supported characteristics are {SUPPORTED_P:?}"))),
    })
}

fn reduce<F: FiniteField>(c: i64) -> F {
    F::from_u64(c.rem_euclid(F::characteristic() as i64) as u64)
}

fn build_over<F: FiniteField>(
    basis: &[String],
    mul: &[Product],
    unit: &[i64],
    ideal: &[Vec<i64>],
    cap: u64,
) -> Result<Instance<F>, ConfigError> {
    let table = AlgebraTable {
        labels: basis.to_vec(),
        products: mul.iter().map(|&(i, j, k, c)| (i, j, k, reduce::<F>(c))).collect(),
        unit: unit.iter().map(|&c| reduce(c)).collect(),
    };
    let a = table.validate().map_err(ConfigError::AlgebraInvalid)?;
    let vectors: Vec<Vec<F>> = ideal.iter().map(|v| v.iter().map(|&c| reduce(c)).collect()).collect();
    let ideal = Ideal::new(&a, &vectors).map_err(ConfigError::IdealInvalid)?;
    Instance::new(a, ideal, cap).map_err(ConfigError::IdealInvalid)
}

#[cfg(test)]
mod tests {
    use super::*;

    const DUAL: &str = include_str!("../fixtures/dual_numbers_f2.json");

    #[test]
    fn dual_numbers_fixture_parses() {
        let cfg = parse_config_str(DUAL).unwrap();
        assert_eq!(cfg.name, "dual_numbers_f2");
        assert_eq!(cfg.instance().algebra_dim(), 2);
        assert_eq!(cfg.options.dim_bound, Some(3));
    }

    #[test]
    fn whole_algebra_as_ideal_is_rejected() {
        let text = DUAL.replace("\"ideal\": [[0, 1]]", "\"ideal\": [[1, 0], [0, 1]]");
        assert!(matches!(
            parse_config_str(&text),
            Err(ConfigError::IdealInvalid(devissage::Error::IdealNotSquareZero))
        ));
    }

    #[test]
    fn missing_unit_is_a_schema_violation() {
        let text = DUAL.replace("\"unit\": [1, 0],", "");
        match parse_config_str(&text) {
            Err(ConfigError::SchemaViolation { field, .. }) => assert_eq!(field, "unit"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn syntax_errors_report_the_line() {
        let text = DUAL.replace("\"p\": 2,", "\"p\": 2");
        match parse_config_str(&text) {
            Err(ConfigError::ParseError { line, .. }) => assert_eq!(line, 4),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn characteristic_checks() {
        let composite = DUAL.replace("\"p\": 2,", "\"p\": 4,");
        assert!(matches!(
            parse_config_str(&composite),
            Err(ConfigError::AlgebraInvalid(devissage::Error::NotPrimeCharacteristic(4)))
        ));
        let large = DUAL.replace("\"p\": 2,", "\"p\": 11,");
        assert!(matches!(parse_config_str(&large), Err(ConfigError::SchemaViolation { .. })));
        let three = DUAL.replace("\"p\": 2,", "\"p\": 3,");
        assert!(matches!(parse_config_str(&three).unwrap().instance(), AnyInstance::F3(_)));
    }

    #[test]
    fn negative_coefficients_reduce() {
        let text = DUAL.replace("\"p\": 2,", "\"p\": 5,").replace("[1, 0, 1, 1]]", "[1, 0, 1, -4]]");
        assert!(parse_config_str(&text).is_ok());
    }

    #[test]
    fn cap_rebuilds_instance() {
        let cfg = parse_config_str(DUAL).unwrap().with_cap(10).unwrap();
        assert_eq!(cfg.cap(), 10);
        with_instance!(cfg.instance(), inst => assert_eq!(inst.cap(), 10));
    }
}
