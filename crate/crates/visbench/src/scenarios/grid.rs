//! Metro-path enumeration on a square grid.
//!
//! Counts the distinct polylines between a left station at (0, n/2) and a
//! right station at (n, n/2) on the (n+1) x (n+1) grid-point lattice. The
//! rule set is configurable: allowed unit-step directions, the maximum turn
//! angle where two path-lines join, whether joints must sit on grid points,
//! monotonicity in x, and an optional cap on the number of full-angle turns.
//!
//! With the default rules (E/NE/SE steps, 90 degree turns, monotone) the
//! 1x1 grid yields 1 path, the 2x2 grid 3 paths, and the 4x4 grid 19. A cap
//! of one full-angle turn brings the 4x4 count to 15.

use std::collections::HashSet;

use crate::error::{Error, Result};

/// Unit-step directions. Stored on a doubled-y lattice so the half-integer
/// station height of odd grids stays integral.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    E,
    Ne,
    Se,
    N,
    S,
}

impl Direction {
    pub const fn name(&self) -> &'static str {
        match self {
            Direction::E => "E",
            Direction::Ne => "NE",
            Direction::Se => "SE",
            Direction::N => "N",
            Direction::S => "S",
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        match text.to_ascii_lowercase().as_str() {
            "e" => Ok(Direction::E),
            "ne" => Ok(Direction::Ne),
            "se" => Ok(Direction::Se),
            "n" => Ok(Direction::N),
            "s" => Ok(Direction::S),
            other => Err(Error::InvalidRules(format!(
                "unknown direction `{other}`, expected e, ne, se, n or s"
            ))),
        }
    }

    fn dx(&self) -> i64 {
        match self {
            Direction::E | Direction::Ne | Direction::Se => 1,
            Direction::N | Direction::S => 0,
        }
    }

    /// Change in doubled y.
    fn dy2(&self) -> i64 {
        match self {
            Direction::E => 0,
            Direction::Ne | Direction::N => 2,
            Direction::Se | Direction::S => -2,
        }
    }

    fn angle_deg(&self) -> f64 {
        match self {
            Direction::E => 0.0,
            Direction::Ne => 45.0,
            Direction::Se => -45.0,
            Direction::N => 90.0,
            Direction::S => -90.0,
        }
    }
}

/// Rule configuration for the enumerator.
#[derive(Debug, Clone)]
pub struct PathRules {
    /// Allowed unit-step directions.
    pub directions: Vec<Direction>,
    /// Maximum absolute turn angle where one path-line joins another.
    pub max_turn_deg: f64,
    /// Require direction changes to happen on grid points.
    pub joints_on_grid: bool,
    /// Restrict to directions that advance x.
    pub monotone_x: bool,
    /// Optional cap on the number of turns that use the full angle budget.
    pub max_sharp_turns: Option<usize>,
}

impl Default for PathRules {
    fn default() -> Self {
        PathRules {
            directions: vec![Direction::E, Direction::Ne, Direction::Se],
            max_turn_deg: 90.0,
            joints_on_grid: true,
            monotone_x: true,
            max_sharp_turns: None,
        }
    }
}

impl PathRules {
    pub fn validate(&self) -> Result<()> {
        if self.directions.is_empty() {
            return Err(Error::InvalidRules("no directions allowed".into()));
        }
        let mut seen = HashSet::new();
        for d in &self.directions {
            if !seen.insert(*d) {
                return Err(Error::InvalidRules(format!("duplicate direction {}", d.name())));
            }
        }
        if self.monotone_x && self.directions.iter().any(|d| d.dx() == 0) {
            return Err(Error::InvalidRules(
                "monotone-in-x rules cannot include the vertical directions n/s".into(),
            ));
        }
        if !(self.max_turn_deg > 0.0 && self.max_turn_deg <= 180.0) {
            return Err(Error::InvalidRules(format!(
                "max turn angle must be in (0, 180], got {}",
                self.max_turn_deg
            )));
        }
        Ok(())
    }
}

/// Enumeration result: the count and the canonically ordered unit-step
/// encodings ("E,NE,SE,E").
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridPaths {
    pub count: usize,
    pub paths: Vec<String>,
}

/// Enumerates distinct station-to-station polylines on the n x n grid under
/// the given rules. Exploration is depth-first and the returned list is
/// sorted, so the output is deterministic.
pub fn enumerate_grid_paths(n: u32, rules: &PathRules) -> Result<GridPaths> {
    rules.validate()?;
    if n == 0 {
        return Err(Error::InvalidRules("grid size must be at least 1".into()));
    }
    let n = n as i64;
    let start = (0i64, n); // doubled y: station height n/2
    let target = (n, n);
    let mut paths = Vec::new();
    let mut visited = HashSet::new();
    visited.insert(start);
    let mut steps = Vec::new();
    walk(start, target, n, rules, None, 0, &mut steps, &mut visited, &mut paths);
    paths.sort();
    Ok(GridPaths { count: paths.len(), paths })
}

#[allow(clippy::too_many_arguments)]
fn walk(
    pos: (i64, i64),
    target: (i64, i64),
    n: i64,
    rules: &PathRules,
    prev: Option<Direction>,
    sharp_turns: usize,
    steps: &mut Vec<Direction>,
    visited: &mut HashSet<(i64, i64)>,
    paths: &mut Vec<String>,
) {
    if pos == target && !steps.is_empty() {
        paths.push(
            steps.iter().map(|d| d.name()).collect::<Vec<_>>().join(","),
        );
        return;
    }
    for &dir in &rules.directions {
        let next = (pos.0 + dir.dx(), pos.1 + dir.dy2());
        if next.0 < 0 || next.0 > n || next.1 < 0 || next.1 > 2 * n {
            continue;
        }
        if visited.contains(&next) {
            continue;
        }
        let mut sharp = sharp_turns;
        if let Some(prev) = prev {
            if prev != dir {
                let turn = (prev.angle_deg() - dir.angle_deg()).abs();
                if turn > rules.max_turn_deg + 1e-9 {
                    continue;
                }
                // a joint: the direction changes at `pos`
                if rules.joints_on_grid && pos.1.rem_euclid(2) != 0 {
                    continue;
                }
                if turn >= rules.max_turn_deg - 1e-9 {
                    sharp += 1;
                    if rules.max_sharp_turns.is_some_and(|cap| sharp > cap) {
                        continue;
                    }
                }
            }
        }
        steps.push(dir);
        visited.insert(next);
        walk(next, target, n, rules, Some(dir), sharp, steps, visited, paths);
        visited.remove(&next);
        steps.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_for_small_grids() {
        let rules = PathRules::default();
        assert_eq!(enumerate_grid_paths(1, &rules).unwrap().count, 1);
        assert_eq!(enumerate_grid_paths(2, &rules).unwrap().count, 3);
        assert_eq!(enumerate_grid_paths(4, &rules).unwrap().count, 19);
    }

    #[test]
    fn sharp_turn_cap_reaches_the_fifteen_path_reading() {
        let rules = PathRules { max_sharp_turns: Some(1), ..PathRules::default() };
        assert_eq!(enumerate_grid_paths(1, &rules).unwrap().count, 1);
        assert_eq!(enumerate_grid_paths(2, &rules).unwrap().count, 3);
        assert_eq!(enumerate_grid_paths(4, &rules).unwrap().count, 15);
    }

    #[test]
    fn two_by_two_paths_are_canonical() {
        let got = enumerate_grid_paths(2, &PathRules::default()).unwrap();
        assert_eq!(got.paths, vec!["E,E", "NE,SE", "SE,NE"]);
    }

    #[test]
    fn max_turn_45_forbids_the_apex_paths() {
        let rules = PathRules { max_turn_deg: 45.0, ..PathRules::default() };
        assert_eq!(enumerate_grid_paths(2, &rules).unwrap().count, 1);
    }

    #[test]
    fn odd_grids_only_allow_the_straight_path_when_joints_must_hit_grid_points() {
        let rules = PathRules::default();
        assert_eq!(enumerate_grid_paths(3, &rules).unwrap().count, 1);
        let relaxed = PathRules { joints_on_grid: false, ..PathRules::default() };
        assert!(enumerate_grid_paths(3, &relaxed).unwrap().count > 1);
    }

    #[test]
    fn paths_respect_rules() {
        let rules = PathRules::default();
        let got = enumerate_grid_paths(4, &rules).unwrap();
        let mut distinct = HashSet::new();
        for path in &got.paths {
            assert!(distinct.insert(path.clone()), "duplicate path {path}");
            let dirs: Vec<Direction> = path.split(',').map(|s| Direction::parse(s).unwrap()).collect();
            let mut x = 0i64;
            let mut y2 = 4i64;
            for pair in dirs.windows(2) {
                let turn = (pair[0].angle_deg() - pair[1].angle_deg()).abs();
                assert!(turn <= rules.max_turn_deg + 1e-9);
            }
            for d in &dirs {
                x += d.dx();
                y2 += d.dy2();
                assert!((0..=4).contains(&x) && (0..=8).contains(&y2));
            }
            assert_eq!((x, y2), (4, 4), "path must end at the right station");
        }
    }

    #[test]
    fn vertical_directions_need_non_monotone_rules() {
        let bad = PathRules {
            directions: vec![Direction::E, Direction::N, Direction::S],
            ..PathRules::default()
        };
        assert!(enumerate_grid_paths(2, &bad).is_err());
        let ok = PathRules {
            directions: vec![Direction::E, Direction::N, Direction::S],
            monotone_x: false,
            ..PathRules::default()
        };
        let got = enumerate_grid_paths(2, &ok).unwrap();
        assert!(got.count >= 1);
        assert!(got.paths.contains(&"E,E".to_string()));
    }

    #[test]
    fn invalid_rules_rejected() {
        assert!(enumerate_grid_paths(0, &PathRules::default()).is_err());
        let empty = PathRules { directions: vec![], ..PathRules::default() };
        assert!(enumerate_grid_paths(2, &empty).is_err());
        let dup = PathRules {
            directions: vec![Direction::E, Direction::E],
            ..PathRules::default()
        };
        assert!(enumerate_grid_paths(2, &dup).is_err());
        let steep = PathRules { max_turn_deg: 0.0, ..PathRules::default() };
        assert!(enumerate_grid_paths(2, &steep).is_err());
    }
}
