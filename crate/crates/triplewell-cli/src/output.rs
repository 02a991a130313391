//! CSV and JSON emitters. Floats are written with `{:.16e}` (17
//! significant digits, `.` decimal separator) so identical configs yield
//! bit-identical files.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use serde::Serialize;
use triplewell::verify::CheckResult;
use triplewell::WellPartition;

type IoResult = Result<(), String>;

fn writer(dir: &Path, name: &str) -> Result<BufWriter<File>, String> {
    let path = dir.join(name);
    File::create(&path)
        .map(BufWriter::new)
        .map_err(|e| format!("{}: {e}", path.display()))
}

fn fail(name: &str) -> impl Fn(std::io::Error) -> String + '_ {
    move |e| format!("{name}: {e}")
}

pub fn write_potential_csv(dir: &Path, xs: &[f64], u: &[f64]) -> IoResult {
    let mut w = writer(dir, "potential.csv")?;
    writeln!(w, "xi,U").map_err(fail("potential.csv"))?;
    for (x, v) in xs.iter().zip(u) {
        writeln!(w, "{x:.16e},{v:.16e}").map_err(fail("potential.csv"))?;
    }
    Ok(())
}

#[derive(Serialize)]
struct Extrema {
    minima: [f64; 3],
    barriers: [f64; 2],
}

pub fn write_extrema_json(dir: &Path, part: &WellPartition) -> IoResult {
    let e = Extrema {
        minima: part.minima,
        barriers: part.barriers,
    };
    std::fs::write(
        dir.join("extrema.json"),
        serde_json::to_string_pretty(&e).expect("serializes"),
    )
    .map_err(|e| format!("extrema.json: {e}"))
}

pub fn write_states_csv(dir: &Path, xs: &[f64], values: &[Vec<f64>]) -> IoResult {
    let mut w = writer(dir, "states.csv")?;
    let header: Vec<String> = (0..values.len()).map(|i| format!("psi{i}")).collect();
    writeln!(w, "xi,{}", header.join(",")).map_err(fail("states.csv"))?;
    for (i, x) in xs.iter().enumerate() {
        write!(w, "{x:.16e}").map_err(fail("states.csv"))?;
        for state in values {
            write!(w, ",{:.16e}", state[i]).map_err(fail("states.csv"))?;
        }
        writeln!(w).map_err(fail("states.csv"))?;
    }
    Ok(())
}

pub fn write_energies_json(dir: &Path, energies: &[f64]) -> IoResult {
    std::fs::write(
        dir.join("energies.json"),
        serde_json::to_string_pretty(energies).expect("serializes"),
    )
    .map_err(|e| format!("energies.json: {e}"))
}

#[derive(Serialize)]
struct Coefficient {
    index: usize,
    energy: f64,
    c: f64,
}

pub fn write_coefficients_json(dir: &Path, c: &[f64], energies: &[f64]) -> IoResult {
    let rows: Vec<Coefficient> = c
        .iter()
        .zip(energies)
        .enumerate()
        .map(|(index, (c, e))| Coefficient {
            index,
            energy: *e,
            c: *c,
        })
        .collect();
    std::fs::write(
        dir.join("coefficients.json"),
        serde_json::to_string_pretty(&rows).expect("serializes"),
    )
    .map_err(|e| format!("coefficients.json: {e}"))
}

pub fn write_evolution_csv(dir: &Path, rows: &[(f64, f64, f64, f64, f64)]) -> IoResult {
    let mut w = writer(dir, "evolution.csv")?;
    writeln!(w, "T,xi,re,im,abs").map_err(fail("evolution.csv"))?;
    for (t, xi, re, im, a) in rows {
        writeln!(w, "{t:.16e},{xi:.16e},{re:.16e},{im:.16e},{a:.16e}")
            .map_err(fail("evolution.csv"))?;
    }
    Ok(())
}

pub fn write_wells_csv(dir: &Path, rows: &[(f64, f64, f64, f64, f64)]) -> IoResult {
    let mut w = writer(dir, "wells.csv")?;
    writeln!(w, "T,pl,pc,pr,autocorr").map_err(fail("wells.csv"))?;
    for (t, pl, pc, pr, ac) in rows {
        writeln!(w, "{t:.16e},{pl:.16e},{pc:.16e},{pr:.16e},{ac:.16e}")
            .map_err(fail("wells.csv"))?;
    }
    Ok(())
}

#[derive(Serialize)]
struct VerifyRow<'a> {
    name: &'a str,
    passed: bool,
    measured: f64,
    tolerance: f64,
    seconds: f64,
    detail: &'a str,
}

pub fn write_verify_json(dir: &Path, checks: &[CheckResult]) -> IoResult {
    let rows: Vec<VerifyRow> = checks
        .iter()
        .map(|c| VerifyRow {
            name: &c.name,
            passed: c.passed,
            measured: c.measured,
            tolerance: c.tolerance,
            seconds: c.seconds,
            detail: &c.detail,
        })
        .collect();
    std::fs::write(
        dir.join("verify.json"),
        serde_json::to_string_pretty(&rows).expect("serializes"),
    )
    .map_err(|e| format!("verify.json: {e}"))
}
