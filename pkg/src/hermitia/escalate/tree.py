"""Escalation trees of positive-definite forms.

A node with truant ``t`` is escalated by adjoining a new basis vector of value ``t``
with every integer cross-coefficient vector ``c`` keeping the form positive definite,
i.e. ``c^T adj(G) c < 2 t det(G)`` for the doubled Gram ``G``. Those ``c`` are
enumerated as short vectors of the adjugate form, so the Cauchy-Schwarz box is never
swept. ``c`` and ``-c`` give isometric children and only one of them is generated.
"""

from typing import Dict, List, Optional, Sequence, Tuple

from ..config.settings import settings
from ..core.errors import EscalationError, FormError
from ..core.linalg import determinant, rational_inverse
from ..criteria.sets import get_set
from ..forms.equivalence import is_equivalent, theta_signature
from ..forms.quadratic import Gram, QuadraticForm
from ..forms.reduction import canonical_key, reduce
from ..io.cache import TreeCache
from ..representation.enumerate import represents, short_vectors, truant
from ..utils.logging import bind, get_logger
from ..utils.parallel import parallel_map
from .models import MAX_TREE_RANK, EscalationOptions, EscalationTree, EscalatorNode, Regime

logger = get_logger(__name__)

# Published escalator counts per rank (index = rank)
REFERENCE_LEVEL_SIZES: Dict[Regime, Tuple[int, ...]] = {
    Regime.CLASSICAL: (1, 1, 2, 9, 207),
    Regime.INTEGRAL: (1, 1, 3, 34, 6560),
}


def _adjugate(gram2: Gram) -> List[List[int]]:
    det = determinant(gram2)
    inv = rational_inverse(gram2)
    return [[int(x * det) for x in row] for row in inv]


def _positive_first(vec: Sequence[int]) -> bool:
    for x in vec:
        if x:
            return x > 0
    return True


def escalation_candidates(form: QuadraticForm, t: int, regime: Regime) -> List[QuadraticForm]:
    """
    Every one-variable extension of ``form`` by a vector of value ``t``, one per sign
    class of the cross coefficients, in lexicographic order of the cross coefficients.
    """
    k = form.n
    if k == 0:
        return [QuadraticForm.diagonal([t])]
    g = form.gram2
    det = determinant(g)
    dual = QuadraticForm.from_gram2([[2 * x for x in row] for row in _adjugate(g)])
    crosses = [tuple([0] * k)]
    crosses += [vec for vec, _ in short_vectors(dual, 2 * t * det - 1) if _positive_first(vec)]
    if regime is Regime.CLASSICAL:
        crosses = [c for c in crosses if all(x % 2 == 0 for x in c)]
    crosses.sort()
    out = []
    for c in crosses:
        rows = [list(row) + [c[i]] for i, row in enumerate(g)]
        rows.append(list(c) + [2 * t])
        child = QuadraticForm.from_gram2(rows)
        if child.is_positive_definite:
            out.append(child)
    return out


def _expand(args: Tuple[Gram, int, str]) -> List[Gram]:
    """Worker: reduced escalation candidates of one node, deduplicated by exact key."""
    gram2, t, regime = args
    seen: Dict[Gram, None] = {}
    for child in escalation_candidates(QuadraticForm(gram2=gram2), t, Regime(regime)):
        seen.setdefault(reduce(child)[0].gram2, None)
    return list(seen)


def _signature(args: Tuple[Gram, int]) -> Tuple[int, ...]:
    gram2, bound = args
    return theta_signature(QuadraticForm(gram2=gram2), bound)


def _merge_bucket(grams: List[Gram]) -> List[List[int]]:
    """Worker: partition one signature bucket into equivalence classes (positions)."""
    forms = [QuadraticForm(gram2=g) for g in grams]
    classes: List[List[int]] = []
    for pos, form in enumerate(forms):
        for cls in classes:
            if is_equivalent(forms[cls[0]], form) is not None:
                cls.append(pos)
                break
        else:
            classes.append([pos])
    return classes


def merge_classes(
    forms: Sequence[QuadraticForm],
    theta_bound: int,
    workers: Optional[int] = None,
) -> List[Tuple[QuadraticForm, Tuple[int, ...], List[int]]]:
    """
    Group reduced forms into equivalence classes.

    Exact key first, then buckets of equal ``(det, representation counts)`` merged by
    isometry search.

    Returns:
        ``(representative, signature, member indices)`` per class, ordered by the
        representative's canonical key
    """
    by_key: Dict[Gram, List[int]] = {}
    for i, form in enumerate(forms):
        by_key.setdefault(form.gram2, []).append(i)
    keys = sorted(by_key, key=canonical_key)
    signatures = parallel_map(_signature, [(k, theta_bound) for k in keys], workers=workers, chunksize=16)
    buckets: Dict[Tuple[int, ...], List[Gram]] = {}
    for k, sig in zip(keys, signatures):
        buckets.setdefault(sig, []).append(k)
    bucket_list = list(buckets.items())
    partitions = parallel_map(_merge_bucket, [grams for _, grams in bucket_list], workers=workers, chunksize=8)
    classes = []
    for (sig, grams), parts in zip(bucket_list, partitions):
        for part in parts:
            rep = grams[part[0]]
            members = sorted(i for p in part for i in by_key[grams[p]])
            classes.append((QuadraticForm(gram2=rep), sig, members))
    classes.sort(key=lambda c: canonical_key(c[0].gram2))
    return classes


def _node_job(args: Tuple[Gram, int, bool, Optional[int]]) -> Tuple[Optional[int], Optional[Tuple[int, ...]]]:
    """Worker: truant of a node and a witness for its parent's truant."""
    gram2, cap, compute, parent_truant = args
    form = QuadraticForm(gram2=gram2)
    found = truant(form, cap) if compute else None
    witness = None
    if parent_truant is not None:
        rep = represents(form, parent_truant)
        witness = rep.vector if rep is not None else None
    return found, witness


def _make_level(
    rank: int,
    classes: List[Tuple[QuadraticForm, Tuple[int, ...], List[int]]],
    member_parents: List[EscalatorNode],
    options: EscalationOptions,
    workers: Optional[int],
) -> List[EscalatorNode]:
    compute = rank < options.max_rank or options.top_truants
    cap = options.cap_for(rank)
    jobs = []
    for rep, _, members in classes:
        first_parent = member_parents[members[0]]
        jobs.append((rep.gram2, cap, compute, first_parent.truant))
    results = parallel_map(_node_job, jobs, workers=workers, chunksize=8)
    nodes = []
    for idx, ((rep, sig, members), (found, witness)) in enumerate(zip(classes, results)):
        parent_keys: List[str] = []
        for m in members:
            key = member_parents[m].key
            if key not in parent_keys:
                parent_keys.append(key)
        if witness is None:
            raise EscalationError(f"escalator {rep} does not represent its parent's truant")
        nodes.append(
            EscalatorNode(
                rank=rank,
                index=idx,
                form=rep,
                regime=options.regime,
                truant=found,
                truant_checked=compute,
                parent=parent_keys[0],
                parents=parent_keys,
                witness=witness,
                signature=sig,
            )
        )
    return nodes


def escalations(
    node: EscalatorNode,
    truant_cap: Optional[int] = None,
    theta_bound: Optional[int] = None,
    workers: Optional[int] = 1,
) -> List[EscalatorNode]:
    """
    Children of one node, deduplicated up to equivalence, with their truants.

    Raises:
        EscalationError: if the node has no truant
    """
    if node.truant is None:
        raise EscalationError(f"node {node.key} has no truant to escalate by")
    options = EscalationOptions(
        regime=node.regime,
        max_rank=MAX_TREE_RANK,
        truant_cap=settings.truant_cap if truant_cap is None else truant_cap,
        top_truant_cap=settings.truant_cap if truant_cap is None else truant_cap,
        theta_bound=settings.equivalence_theta_bound if theta_bound is None else theta_bound,
    )
    reduced = [QuadraticForm(gram2=g) for g in _expand((node.form.gram2, node.truant, node.regime.value))]
    classes = merge_classes(reduced, options.theta_bound, workers=workers)
    return _make_level(node.rank + 1, classes, [node] * len(reduced), options, workers)


def root_node(regime: Regime) -> EscalatorNode:
    """The zero form: rank 0, truant 1."""
    return EscalatorNode(rank=0, index=0, form=QuadraticForm.zero(0), regime=regime, truant=1)


def build_tree(options: EscalationOptions, workers: Optional[int] = None) -> EscalationTree:
    """
    Breadth-first escalation from the zero form up to ``options.max_rank``.

    Nodes without a truant below the cap are leaf candidates and are not expanded.
    """
    log = bind(logger, regime=options.regime.value)
    levels: List[List[EscalatorNode]] = [[root_node(options.regime)]]
    for rank in range(1, options.max_rank + 1):
        parents = [n for n in levels[-1] if n.truant is not None]
        expansions = parallel_map(
            _expand,
            [(p.form.gram2, p.truant, options.regime.value) for p in parents],
            workers=workers,
        )
        forms: List[QuadraticForm] = []
        member_parents: List[EscalatorNode] = []
        for parent, grams in zip(parents, expansions):
            for g in grams:
                forms.append(QuadraticForm(gram2=g))
                member_parents.append(parent)
        classes = merge_classes(forms, options.theta_bound, workers=workers)
        level = _make_level(rank, classes, member_parents, options, workers)
        levels.append(level)
        log.info(
            f"Escalation rank {rank}: {len(level)} classes",
            extra={"rank": rank, "candidates": len(forms), "classes": len(level)},
        )
    tree = EscalationTree(options=options, levels=levels)
    tree.diagnostics.extend(_diagnose(tree))
    return tree


def _diagnose(tree: EscalationTree) -> List[str]:
    """Truant containment and reference level sizes; deviations are warnings."""
    notes: List[str] = []
    regime = tree.options.regime
    allowed = get_set("S290" if regime is Regime.INTEGRAL else "S15")
    for rank in range(1, len(tree.levels)):
        stray = sorted({t for t in tree.truants(rank) if t not in allowed})
        if stray:
            notes.append(f"rank {rank} truants outside {allowed.name}: {stray}")
    reference = REFERENCE_LEVEL_SIZES[regime]
    for rank, count in tree.counts().items():
        if rank < len(reference) and count != reference[rank]:
            notes.append(
                f"rank {rank} has {count} escalator classes; published count is {reference[rank]}"
            )
    for note in notes:
        logger.warning(note)
    return notes


def find_escalator(tree: EscalationTree, form: QuadraticForm) -> Optional[EscalatorNode]:
    """The node of ``tree`` equivalent to ``form``, if any."""
    if not form.is_positive_definite:
        raise FormError(f"escalator lookup needs a positive definite form: {form}")
    level = tree.level(form.n)
    if not level:
        return None
    reduced = reduce(form)[0]
    for node in level:
        if node.form.gram2 == reduced.gram2:
            return node
    sig = theta_signature(reduced, tree.options.theta_bound)
    for node in level:
        if node.signature == sig and is_equivalent(node.form, reduced) is not None:
            return node
    return None


_TREES: Dict[EscalationOptions, EscalationTree] = {}


def default_options(regime: Regime, max_rank: int = MAX_TREE_RANK, top_truants: bool = True) -> EscalationOptions:
    return EscalationOptions(
        regime=regime,
        max_rank=max_rank,
        truant_cap=settings.truant_cap,
        top_truant_cap=settings.top_truant_cap,
        top_truants=top_truants,
        theta_bound=settings.equivalence_theta_bound,
    )


def load_or_build_tree(
    options: EscalationOptions,
    use_cache: Optional[bool] = None,
    workers: Optional[int] = None,
) -> EscalationTree:
    """Tree for ``options`` from memory, the SQLite cache, or a fresh build."""
    if options in _TREES:
        return _TREES[options]
    use_cache = settings.use_tree_cache if use_cache is None else use_cache
    tree = None
    cache = None
    if use_cache:
        cache = TreeCache(settings.cache_dir)
        tree = cache.get_tree(options)
        if tree is not None:
            logger.info(f"Loaded {options.regime.value} escalation tree from cache")
    if tree is None:
        tree = build_tree(options, workers=workers)
        if cache is not None:
            cache.put_tree(tree)
    if cache is not None:
        cache.close()
    _TREES[options] = tree
    return tree


def is_escalator(form: QuadraticForm, regime: Regime, tree: Optional[EscalationTree] = None) -> bool:
    """
    Whether ``form`` is equivalent to a node of the escalation tree at its rank.

    Raises:
        EscalationError: for forms of rank above the tree cap
    """
    if form.n > MAX_TREE_RANK:
        raise EscalationError(f"escalation trees stop at rank {MAX_TREE_RANK}, form has {form.n} variables")
    if tree is None or tree.options.max_rank < form.n:
        tree = load_or_build_tree(default_options(regime))
    return find_escalator(tree, form) is not None
