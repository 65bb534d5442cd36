#![allow(dead_code)]

use graded_hilbert::{DimVector, Group};

pub struct Case {
    pub name: String,
    pub group: Group,
    pub dims: DimVector,
}

fn case(name: &str, group: &Group, dims: &[u64]) -> Case {
    Case {
        name: format!("{name} {dims:?}"),
        group: group.clone(),
        dims: DimVector::for_group(group, dims.to_vec()).unwrap(),
    }
}

pub fn groups() -> Vec<(&'static str, Group)> {
    let z2 = Group::cyclic(2).unwrap();
    vec![
        ("Z/2", z2.clone()),
        ("Z/3", Group::cyclic(3).unwrap()),
        ("Z/4", Group::cyclic(4).unwrap()),
        ("Z/5", Group::cyclic(5).unwrap()),
        ("Z/6", Group::cyclic(6).unwrap()),
        ("Z/7", Group::cyclic(7).unwrap()),
        ("Z/8", Group::cyclic(8).unwrap()),
        ("V4", Group::direct_product(&z2, &z2).unwrap()),
        ("D3", Group::dihedral(3).unwrap()),
        ("D4", Group::dihedral(4).unwrap()),
        ("S3", Group::symmetric(3).unwrap()),
        ("S4", Group::symmetric(4).unwrap()),
    ]
}

/// Entries drawn once from a seeded generator (values 0..=3) and frozen.
fn random_dims(name: &str) -> Vec<u64> {
    match name {
        "Z/2" => vec![2, 2],
        "Z/3" => vec![1, 2, 2],
        "Z/4" => vec![2, 0, 1, 2],
        "Z/5" => vec![0, 0, 3, 2, 2],
        "Z/6" => vec![0, 1, 0, 0, 1, 2],
        "Z/7" => vec![0, 1, 2, 2, 3, 3, 1],
        "Z/8" => vec![3, 2, 3, 1, 0, 2, 2, 2],
        "V4" => vec![3, 1, 1, 1],
        "D3" => vec![3, 0, 3, 0, 2, 3],
        "D4" => vec![2, 0, 3, 3, 2, 0, 0, 1],
        "S3" => vec![0, 2, 2, 1, 0, 2],
        "S4" => vec![
            0, 1, 1, 2, 2, 3, 0, 1, 0, 2, 2, 0, 3, 2, 1, 0, 1, 2, 2, 3, 3, 3, 0, 0,
        ],
        _ => unreachable!(),
    }
}

/// Gradings concentrated in a single element (or nowhere).
pub fn trivial_cases() -> Vec<Case> {
    let z = |n| Group::cyclic(n).unwrap();
    let s3 = Group::symmetric(3).unwrap();
    let d4 = Group::dihedral(4).unwrap();
    vec![
        case("Z/2", &z(2), &[0, 2]),
        case("Z/6", &z(6), &[0, 0, 2, 0, 0, 0]),
        case("Z/4", &z(4), &[0, 3, 0, 0]),
        case("Z/5", &z(5), &[3, 0, 0, 0, 0]),
        // 231 is a 3-cycle.
        case("S3", &s3, &[0, 0, 0, 2, 0, 0]),
        // r has order 4.
        case("D4", &d4, &[0, 1, 0, 0, 0, 0, 0, 0]),
        case("Z/3", &z(3), &[0, 0, 0]),
    ]
}

/// Gradings supported on exactly `{e, x}`.
pub fn two_block_cases() -> Vec<Case> {
    let z = |n| Group::cyclic(n).unwrap();
    vec![
        case("Z/3", &z(3), &[2, 1, 0]),
        case("Z/4", &z(4), &[1, 0, 2, 0]),
        case("Z/5", &z(5), &[2, 0, 0, 1, 0]),
        case("S3", &Group::symmetric(3).unwrap(), &[1, 2, 0, 0, 0, 0]),
        case("D4", &Group::dihedral(4).unwrap(), &[1, 0, 0, 0, 0, 0, 2, 0]),
        case("Z/8", &z(8), &[1, 0, 0, 3, 0, 0, 0, 0]),
    ]
}

pub fn corpus() -> Vec<Case> {
    let mut out = Vec::new();
    for (name, g) in groups() {
        out.push(case(name, &g, &vec![1; g.order()]));
        out.push(case(name, &g, &random_dims(name)));
    }
    out.extend(trivial_cases());
    out.extend(two_block_cases());
    out.push(case("Z/4", &Group::cyclic(4).unwrap(), &[0, 1, 0, 1]));
    out
}

pub struct Golden {
    pub file: String,
    pub case: Case,
    pub num: graded_hilbert::IntPoly,
    pub den: graded_hilbert::IntPoly,
}

/// Reads every `tests/golden/*.json`, sorted by file name.
pub fn golden() -> Vec<Golden> {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let mut paths: Vec<_> = std::fs::read_dir(&dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    paths.sort();
    paths
        .into_iter()
        .map(|path| {
            let v: serde_json::Value =
                serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
            let n: usize = v["group"].as_str().unwrap().strip_prefix("cyclic:").unwrap().parse().unwrap();
            let dims: Vec<u64> = v["dims"].as_array().unwrap().iter().map(|d| d.as_u64().unwrap()).collect();
            let poly = |key: &str| {
                let items: Vec<&str> = v[key].as_array().unwrap().iter().map(|c| c.as_str().unwrap()).collect();
                graded_hilbert::IntPoly::from_decimal_strings(&items).unwrap()
            };
            Golden {
                file: path.file_name().unwrap().to_string_lossy().into_owned(),
                case: case(&format!("Z/{n}"), &Group::cyclic(n).unwrap(), &dims),
                num: poly("num"),
                den: poly("den"),
            }
        })
        .collect()
}
