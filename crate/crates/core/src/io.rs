//! JSON files. Rationals are always strings (`"3"`, `"-7/2"`).

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::antipodality::{Certificate, Mode};
use crate::config::{ConstructionSpec, PointConfig};
use crate::error::{Error, Result};
use crate::rational::{format_rational, parse_rational, Point};
use crate::segments::{Segment3, SegmentFamily};

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PointConfigFile {
    dim: usize,
    points: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    label: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    construction: Option<ConstructionSpec>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SegmentFile {
    segments: Vec<[Vec<String>; 2]>,
}

fn parse_point(coords: &[String], field: &str) -> Result<Point> {
    coords
        .iter()
        .enumerate()
        .map(|(c, s)| parse_rational(s).map_err(|e| Error::Parse(format!("{field}[{c}]: {e}"))))
        .collect()
}

fn format_point(p: &[crate::Rational]) -> Vec<String> {
    p.iter().map(format_rational).collect()
}

fn json_error(e: serde_json::Error) -> Error {
    Error::Parse(format!("line {}, column {}: {e}", e.line(), e.column()))
}

pub fn config_from_json(text: &str) -> Result<PointConfig> {
    let file: PointConfigFile = serde_json::from_str(text).map_err(json_error)?;
    let mut points = Vec::with_capacity(file.points.len());
    for (i, p) in file.points.iter().enumerate() {
        if p.len() != file.dim {
            return Err(Error::Parse(format!(
                "points[{i}]: expected {} coordinates, found {}",
                file.dim,
                p.len()
            )));
        }
        points.push(parse_point(p, &format!("points[{i}]"))?);
    }
    let mut config = PointConfig::new(file.dim, points)?;
    config.label = file.label;
    config.construction = file.construction;
    Ok(config)
}

pub fn config_to_json(config: &PointConfig) -> String {
    let file = PointConfigFile {
        dim: config.dim(),
        points: config.points().iter().map(|p| format_point(p)).collect(),
        label: config.label.clone(),
        construction: config.construction.clone(),
    };
    serde_json::to_string_pretty(&file).expect("plain data serializes")
}

pub fn segments_from_json(text: &str) -> Result<SegmentFamily> {
    let file: SegmentFile = serde_json::from_str(text).map_err(json_error)?;
    let segments = file
        .segments
        .iter()
        .enumerate()
        .map(|(i, [a, b])| {
            let field = format!("segments[{i}]");
            let a = parse_point(a, &format!("{field}[0]"))?;
            let b = parse_point(b, &format!("{field}[1]"))?;
            Segment3::new(a, b).map_err(|e| Error::Parse(format!("{field}: {e}")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SegmentFamily::new(segments))
}

pub fn segments_to_json(family: &SegmentFamily) -> String {
    let file = SegmentFile {
        segments: family
            .segments
            .iter()
            .map(|s| {
                let [a, b] = s.endpoints();
                [format_point(a), format_point(b)]
            })
            .collect(),
    };
    serde_json::to_string_pretty(&file).expect("plain data serializes")
}

#[derive(Debug, Serialize, Deserialize)]
pub struct CertificateRecord {
    pub i: usize,
    pub j: usize,
    pub mode: Mode,
    pub direction: Vec<String>,
    pub hi: String,
    pub lo: String,
}

impl CertificateRecord {
    pub fn new(i: usize, j: usize, mode: Mode, cert: &Certificate) -> Self {
        CertificateRecord {
            i,
            j,
            mode,
            direction: format_point(&cert.direction),
            hi: format_rational(&cert.hi),
            lo: format_rational(&cert.lo),
        }
    }
}

/// Writes through a temporary file in the same directory and renames it.
pub fn write_atomic(path: &Path, contents: &str) -> Result<()> {
    let dir = path
        .parent()
        .filter(|p| !p.as_os_str().is_empty())
        .unwrap_or(Path::new("."));
    let name = path
        .file_name()
        .ok_or_else(|| Error::Parse(format!("not a file path: {}", path.display())))?
        .to_string_lossy();
    let tmp = dir.join(format!(".{name}.{}.tmp", std::process::id()));
    fs::write(&tmp, contents)?;
    if let Err(e) = fs::rename(&tmp, path) {
        let _ = fs::remove_file(&tmp);
        return Err(e.into());
    }
    Ok(())
}

pub fn read_config(path: &Path) -> Result<PointConfig> {
    config_from_json(&fs::read_to_string(path)?)
}

pub fn write_config(path: &Path, config: &PointConfig) -> Result<()> {
    write_atomic(path, &(config_to_json(config) + "\n"))
}

pub fn read_segments(path: &Path) -> Result<SegmentFamily> {
    segments_from_json(&fs::read_to_string(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    #[test]
    fn round_trip() {
        let c = PointConfig::new(
            2,
            vec![
                vec![frac(1, 3), frac(-7, 2)],
                vec![frac(0, 1), frac(5, 1)],
                vec![frac(2, 1), frac(0, 1)],
            ],
        )
        .unwrap()
        .labeled("tri")
        .with_construction(ConstructionSpec::new("x").with("a", 1));
        let text = config_to_json(&c);
        assert!(text.contains("\"-7/2\""));
        assert_eq!(config_from_json(&text).unwrap(), c);
    }

    #[test]
    fn errors_name_the_field() {
        let bad = r#"{"dim": 2, "points": [["1", "0"], ["1/0", "2"]]}"#;
        let e = config_from_json(bad).unwrap_err().to_string();
        assert!(e.contains("points[1][0]"), "{e}");
        let short = r#"{"dim": 2, "points": [["1"]]}"#;
        assert!(config_from_json(short).unwrap_err().to_string().contains("points[0]"));
        let floats = "{\"dim\": 1,\n \"points\": [[0.5]]}";
        assert!(config_from_json(floats).unwrap_err().to_string().contains("line 2"));
    }

    #[test]
    fn segments_round_trip() {
        let f = crate::segments::segment_construction(crate::segments::SegmentKind::SkewInteriorThree);
        assert_eq!(segments_from_json(&segments_to_json(&f)).unwrap(), f);
    }

    #[test]
    fn atomic_write_replaces() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("out.json");
        write_atomic(&p, "a").unwrap();
        write_atomic(&p, "b").unwrap();
        assert_eq!(fs::read_to_string(&p).unwrap(), "b");
        assert_eq!(fs::read_dir(dir.path()).unwrap().count(), 1);
    }
}
