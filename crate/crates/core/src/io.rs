//! File formats: point CSV and triangulation JSON.

use std::io::{BufRead, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::geometry::{Point2, Triangulation};
use crate::{Error, Result};

/// Read points from CSV: one `x,y` pair per line; a literal `x,y` header is
/// skipped; blank lines ignored. Non-finite coordinates are rejected.
pub fn read_points_csv(path: &Path) -> Result<Vec<Point2>> {
    let file = std::fs::File::open(path)?;
    parse_points_csv(std::io::BufReader::new(file))
}

pub fn parse_points_csv<R: BufRead>(reader: R) -> Result<Vec<Point2>> {
    let mut out = Vec::new();
    for (lineno, line) in reader.lines().enumerate() {
        let line = line?;
        let t = line.trim();
        if t.is_empty() {
            continue;
        }
        if lineno == 0 && t.eq_ignore_ascii_case("x,y") {
            continue;
        }
        let mut parts = t.split(',');
        let (xs, ys) = (parts.next(), parts.next());
        let (Some(xs), Some(ys), None) = (xs, ys, parts.next()) else {
            return Err(Error::Parse(format!("line {}: expected \"x,y\"", lineno + 1)));
        };
        let x: f64 = xs
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("line {}: bad x {:?}", lineno + 1, xs)))?;
        let y: f64 = ys
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("line {}: bad y {:?}", lineno + 1, ys)))?;
        let p = Point2::new(x, y);
        if !p.is_finite() {
            return Err(Error::Parse(format!("line {}: non-finite point", lineno + 1)));
        }
        out.push(p);
    }
    Ok(out)
}

/// Write points as CSV with a header, 17 significant digits.
pub fn write_points_csv<W: Write>(mut w: W, points: &[Point2]) -> Result<()> {
    writeln!(w, "x,y")?;
    for p in points {
        writeln!(w, "{:.16e},{:.16e}", p.x, p.y)?;
    }
    Ok(())
}

/// Serialized triangulation: `{"sites": [[x, y], ...], "triangles": [[i, j, k], ...]}`.
#[derive(Serialize, Deserialize)]
struct TriangulationFile {
    sites: Vec<[f64; 2]>,
    triangles: Vec<[usize; 3]>,
}

pub fn triangulation_to_json(t: &Triangulation) -> String {
    let file = TriangulationFile {
        sites: t.sites.iter().map(|p| [p.x, p.y]).collect(),
        triangles: t.triangles.clone(),
    };
    serde_json::to_string_pretty(&file).expect("serializable")
}
