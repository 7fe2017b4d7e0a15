//! Strongly connected components via Tarjan's algorithm.

/// Computes the strongly connected components of a directed graph given as an
/// adjacency list. Components are returned in topological order of the
/// condensation (every arc between two components goes from an earlier to a
/// later one); nodes within a component are sorted ascending.
pub(crate) fn strongly_connected_components(graph: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let n = graph.len();
    let mut state = TarjanState {
        next_index: 0,
        stack: Vec::new(),
        on_stack: vec![false; n],
        index: vec![None; n],
        low: vec![0; n],
        components: Vec::new(),
    };
    for v in 0..n {
        if state.index[v].is_none() {
            strongconnect(v, graph, &mut state);
        }
    }
    // Tarjan emits components in reverse topological order.
    state.components.reverse();
    for component in &mut state.components {
        component.sort_unstable();
    }
    state.components
}

struct TarjanState {
    next_index: usize,
    stack: Vec<usize>,
    on_stack: Vec<bool>,
    index: Vec<Option<usize>>,
    low: Vec<usize>,
    components: Vec<Vec<usize>>,
}

fn strongconnect(v: usize, graph: &[Vec<usize>], state: &mut TarjanState) {
    state.index[v] = Some(state.next_index);
    state.low[v] = state.next_index;
    state.next_index += 1;
    state.stack.push(v);
    state.on_stack[v] = true;

    for &w in &graph[v] {
        if state.index[w].is_none() {
            strongconnect(w, graph, state);
            state.low[v] = state.low[v].min(state.low[w]);
        } else if state.on_stack[w] {
            state.low[v] = state.low[v].min(state.index[w].unwrap());
        }
    }

    if state.low[v] == state.index[v].unwrap() {
        let mut component = Vec::new();
        loop {
            let w = state.stack.pop().expect("stack underflow");
            state.on_stack[w] = false;
            component.push(w);
            if w == v {
                break;
            }
        }
        state.components.push(component);
    }
}
