# ═══════════════════════════════════════════════════════════════════════════════
# Toolkit__CLI - the `adic-toolkit` command line
#
#   adic-toolkit cech   {p1, annulus, tate, bidisc}
#   adic-toolkit factor <matrix file | ->
#   adic-toolkit point  {eval, join, retract, specialize, tree}
#   adic-toolkit tate   {normalize, retract, lift, specialize, dualgraph, jinv, disjoint}
#   adic-toolkit sweep
#
# Payloads go to stdout, logs and errors to stderr; the exit code comes from
# the error class (see config.EXIT_CODE__*)
# ═══════════════════════════════════════════════════════════════════════════════

import argparse
import logging
import sys
from osbot_utils.type_safe.Type_Safe                    import Type_Safe
from osbot_utils.utils.Files                            import file_contents, file_exists
from osbot_utils.utils.Json                             import json_dumps
from adic_spaces_toolkit.cartan.Cartan__Factorizer      import Cartan__Factorizer
from adic_spaces_toolkit.cartan.Matrix__Parser          import Matrix__Parser
from adic_spaces_toolkit.cech.Cech__Cohomology          import Cech__Cohomology
from adic_spaces_toolkit.cech.Cech__Space__Spec         import Cech__Space__Spec
from adic_spaces_toolkit.cli.Run__Config                import Run__Config
from adic_spaces_toolkit.config                         import EXIT_CODE__OK, EXIT_CODE__USAGE, TOOLKIT__DESCRIPTION
from adic_spaces_toolkit.models.Disc__Model__Spec       import Disc__Model__Spec
from adic_spaces_toolkit.models.Disc__Models            import Disc__Models
from adic_spaces_toolkit.models.Dual__Graph             import Dual__Graph
from adic_spaces_toolkit.models.J__Invariant            import J__Invariant
from adic_spaces_toolkit.models.Tate__Curve             import Tate__Curve
from adic_spaces_toolkit.models.Tate__Params            import Tate__Params
from adic_spaces_toolkit.padic.Rational__Val            import rational_val, val_to_json
from adic_spaces_toolkit.points.Disc__Tree              import Disc__Tree
from adic_spaces_toolkit.points.Point__Parser           import Point__Parser
from adic_spaces_toolkit.series.Chart                   import Chart
from adic_spaces_toolkit.series.Series__Parser          import Series__Parser
from adic_spaces_toolkit.utils.Toolkit__Errors          import Adic_Toolkit__Error, Invalid__Spec, Missing__Parameter, Parse__Error
from adic_spaces_toolkit.utils.Version                  import Version

logger = logging.getLogger(__name__)

CLI__PROG           = 'adic-toolkit'
CLI__FORMAT__DOT    = 'dot'
CLI__FORMAT__TEXT   = 'text'
CLI__STDIN          = '-'
LOG__FORMAT         = '%(levelname)s %(name)s: %(message)s'


class Toolkit__CLI(Type_Safe):
    config : Run__Config = None

    # ═══════════════════════════════════════════════════════════════════════════════
    # Parser
    # ═══════════════════════════════════════════════════════════════════════════════

    def common_flags(self) -> argparse.ArgumentParser:                          # accepted before and after the subcommand
        common = argparse.ArgumentParser(add_help=False, argument_default=argparse.SUPPRESS)
        common.add_argument('-p', '--prime'    , type=int, help='residue characteristic p (prime)')
        common.add_argument('-N', '--precision', type=int, help='relative p-adic precision N')
        common.add_argument('-D', '--window'   , type=int, help='exponent window [-D, D]')
        common.add_argument('--threshold'      , type=int, help='zero threshold for elementary divisors (< N)')
        common.add_argument('--format'         , choices=('json', 'dot', 'text'))
        common.add_argument('--verbose'        , action='store_true', help='debug logging on stderr')
        return common

    def parser(self) -> argparse.ArgumentParser:
        common  = self.common_flags()
        parser  = argparse.ArgumentParser(prog=CLI__PROG, description=TOOLKIT__DESCRIPTION, parents=[common])
        parser.add_argument('--version', action='version', version=Version().banner())
        commands = parser.add_subparsers(dest='command', required=True)

        cech  = commands.add_parser('cech', help='Čech cohomology of O on a two-piece cover').add_subparsers(dest='space', required=True)
        for name in ('p1', 'annulus', 'tate', 'bidisc'):
            space = cech.add_parser(name, parents=[common])
            space.add_argument('--workers', type=int, default=1)
            if name == 'annulus':
                space.add_argument('--a' , required=True)
                space.add_argument('--s0', required=True)
                space.add_argument('--b' , required=True)
            if name == 'tate':
                self.add_tate_params(space)

        factor = commands.add_parser('factor', parents=[common], help='Cartan factorization B = B1*·B2*')
        factor.add_argument('matrix', help=f"sparse matrix file, or {CLI__STDIN} for stdin")
        factor.add_argument('--target'     , default=None)
        factor.add_argument('--max-iter'   , type=int, default=0)
        factor.add_argument('--trivialize' , action='store_true', help='also emit Y and Z with Y = B·Z')

        point = commands.add_parser('point', help='points of the adic disc and G_m').add_subparsers(dest='action', required=True)
        evaluate = point.add_parser('eval', parents=[common])
        evaluate.add_argument('--f'    , required=True)
        evaluate.add_argument('--at'   , required=True)
        evaluate.add_argument('--chart', default='[0,+inf]')
        join = point.add_parser('join', parents=[common])
        join.add_argument('--x', required=True)
        join.add_argument('--y', required=True)
        retract = point.add_parser('retract', parents=[common])
        retract.add_argument('--at', required=True)
        specialize = point.add_parser('specialize', parents=[common])
        specialize.add_argument('--at'   , required=True)
        specialize.add_argument('--model', default='', help="';'-separated type 2 vertices, η(0,0) is always added")
        tree = point.add_parser('tree', parents=[common])
        tree.add_argument('--model', default='')

        tate = commands.add_parser('tate', help='the Tate curve E_q').add_subparsers(dest='action', required=True)
        for name in ('normalize', 'retract', 'specialize'):
            action = tate.add_parser(name, parents=[common])
            self.add_tate_params(action)
            action.add_argument('--at', required=True)
            if name == 'specialize':
                action.add_argument('--breaks', default=None)
        lift = tate.add_parser('lift', parents=[common])
        self.add_tate_params(lift)
        lift.add_argument('--s'    , required=True)
        lift.add_argument('--sheet', type=int, default=0)
        dualgraph = tate.add_parser('dualgraph', parents=[common])
        self.add_tate_params(dualgraph)
        dualgraph.add_argument('--breaks', default=None, help="comma-separated break points in [0, vq)")
        jinv = tate.add_parser('jinv', parents=[common])
        jinv.add_argument('--terms', type=int, default=3)
        jinv.add_argument('--vq'   , default=None)
        disjoint = tate.add_parser('disjoint', parents=[common])
        self.add_tate_params(disjoint)
        disjoint.add_argument('--n', type=int, required=True)
        disjoint.add_argument('--m', type=int, required=True)

        sweep = commands.add_parser('sweep', parents=[common], help='acyclicity sweep over random integral annuli')
        sweep.add_argument('--count'  , type=int, default=10)
        sweep.add_argument('--seed'   , type=int, default=0)
        sweep.add_argument('--workers', type=int, default=1)
        return parser

    def add_tate_params(self, parser):
        parser.add_argument('--vq', default=None, help='v(q) > 0')
        parser.add_argument('--q' , default=None, help='the Tate parameter itself, e.g. 125')

    # ═══════════════════════════════════════════════════════════════════════════════
    # Entry points
    # ═══════════════════════════════════════════════════════════════════════════════

    def run(self, argv=None) -> int:
        try:
            args = self.parser().parse_args(argv)
        except SystemExit as exit_:
            return exit_.code if isinstance(exit_.code, int) else EXIT_CODE__USAGE
        self.setup_logging(getattr(args, 'verbose', False))
        try:
            payload = self.execute(args)
            sys.stdout.write(self.render(payload, self.output_format(args, payload)) + '\n')
        except Adic_Toolkit__Error as error:
            logger.debug("command failed", exc_info=True)
            sys.stderr.write(json_dumps(error.json(), sort_keys=True) + '\n')
            return error.exit_code
        return EXIT_CODE__OK

    def invoke(self, argv):                                                      # parse and execute, returning the payload
        return self.execute(self.parser().parse_args(argv))

    def execute(self, args):
        self.config = Run__Config.from_args(args)
        handler     = getattr(self, f"cmd_{args.command}")
        return handler(args)

    def setup_logging(self, verbose: bool):
        logging.basicConfig(stream=sys.stderr, format=LOG__FORMAT, level=logging.DEBUG if verbose else logging.WARNING, force=True)

    # ═══════════════════════════════════════════════════════════════════════════════
    # Commands
    # ═══════════════════════════════════════════════════════════════════════════════

    def cmd_cech(self, args) -> dict:
        ctx = self.config.context()
        if args.space == 'p1':
            spec = Cech__Space__Spec.proj_line()
        elif args.space == 'annulus':
            spec = Cech__Space__Spec.annulus(rational_val(args.a), rational_val(args.s0), rational_val(args.b))
        elif args.space == 'tate':
            params = self.tate_params(args)
            spec   = Cech__Space__Spec.tate_curve(vq=params.vq, q=params.q)
        else:
            spec = Cech__Space__Spec.bidisc_boundary()
        with Cech__Cohomology(ctx=ctx, window=self.config.window, threshold=self.config.threshold, max_workers=args.workers) as _:
            return _.cohomology_of_spec(spec).json()

    def cmd_factor(self, args) -> dict:
        ctx    = self.config.context()
        text   = self.read_input(args.matrix)
        matrix = Matrix__Parser(ctx, self.config.window).parse(text)
        with Cartan__Factorizer(ctx=ctx, max_iter=args.max_iter) as _:
            if args.trivialize:
                Y, Z, result = _.trivialize(matrix, target=args.target)
                data         = result.json()
                data['Y']    = Y.json()
                data['Z']    = Z.json()
                return data
            return _.factor(matrix, target=args.target).json()

    def cmd_point(self, args):
        ctx    = self.config.context()
        points = Point__Parser(ctx)
        tree   = Disc__Tree(ctx=ctx)
        if args.action == 'eval':
            f = Series__Parser(ctx, Chart.parse(args.chart), self.config.window).parse(args.f)
            return dict(val=tree.seminorm_val(f, points.parse(args.at)).json())
        if args.action == 'join':
            joined = tree.join(points.parse(args.x), points.parse(args.y))
            return dict(point=joined.json(), text=str(joined))
        if args.action == 'retract':
            return dict(retract=val_to_json(tree.gm_retract(points.parse(args.at))))
        models = Disc__Models(ctx=ctx)
        spec   = Disc__Model__Spec.closure(ctx, points.parse_many(args.model))
        if args.action == 'tree':
            return models.dual_tree(spec)
        target = models.specialize(spec, points.parse(args.at))
        return dict(target=target.json(), text=str(target), model=spec.json())

    def cmd_tate(self, args):
        if args.action == 'jinv':
            with J__Invariant() as _:
                coefficients = _.expansion(args.terms)
                if args.vq is None:
                    return coefficients
                return dict(coefficients=coefficients, valuation=val_to_json(_.valuation(Tate__Params.from_vq(args.vq))))
        ctx    = self.config.context()
        params = self.tate_params(args)
        curve  = Tate__Curve(ctx=ctx)
        if args.action == 'dualgraph':
            return curve.dual_graph(self.breaks(args, curve, params), params)
        if args.action == 'disjoint':
            return dict(n=args.n, m=args.m, disjoint=curve.cover_disjoint(args.n, args.m, params))
        if args.action == 'lift':
            return dict(lift=val_to_json(curve.universal_cover_lift(args.s, args.sheet, params)))
        x = Point__Parser(ctx).parse(args.at)
        if args.action == 'normalize':
            representative, sheet = curve.orbit_normalize(x, params)
            return dict(representative = representative.json()                          ,
                        text           = str(representative)                            ,
                        sheet          = sheet                                          ,
                        retract        = val_to_json(curve.retract(representative, params)))
        if args.action == 'retract':
            return dict(retract=val_to_json(curve.retract(x, params)))
        target = curve.tate_specialize(x, self.breaks(args, curve, params), params)
        return dict(target=target.json(), text=str(target))

    def cmd_sweep(self, args) -> list:
        ctx = self.config.context()
        with Cech__Cohomology(ctx=ctx, window=self.config.window, threshold=self.config.threshold, max_workers=args.workers) as _:
            reports = _.acyclicity_sweep(Cech__Cohomology.random_annulus_specs(args.count, seed=args.seed))
            return Cech__Cohomology.sweep_table(reports)

    # ═══════════════════════════════════════════════════════════════════════════════
    # Helpers
    # ═══════════════════════════════════════════════════════════════════════════════

    def tate_params(self, args) -> Tate__Params:
        if args.q is not None:
            q      = self.config.context().scalar(args.q)
            params = Tate__Params.from_q(q)
            if args.vq is not None and rational_val(args.vq) != params.vq:
                raise Invalid__Spec(f"--vq {args.vq} conflicts with v(q) = {params.vq}")
            return params
        if args.vq is None:
            raise Missing__Parameter("the Tate curve needs --vq or --q")
        return Tate__Params.from_vq(rational_val(args.vq))

    def breaks(self, args, curve: Tate__Curve, params: Tate__Params) -> list:
        if not args.breaks:
            return curve.w_model_breaks(params)
        return [rational_val(value) for value in args.breaks.split(',') if value.strip()]

    def read_input(self, path: str) -> str:
        if path == CLI__STDIN:
            return sys.stdin.read()
        if not file_exists(path):
            raise Parse__Error(f"matrix file not found: {path}")
        return file_contents(path)

    def output_format(self, args, payload) -> str:
        if isinstance(payload, Dual__Graph) and getattr(args, 'format', None) is None:
            return CLI__FORMAT__DOT                                              # graphs default to DOT
        return self.config.output_format

    def render(self, payload, output_format: str) -> str:
        if isinstance(payload, Dual__Graph):
            if output_format == CLI__FORMAT__DOT:
                return payload.to_dot()
            if output_format == CLI__FORMAT__TEXT:
                return self.graph_text(payload)
            return json_dumps(payload.json(), sort_keys=True)
        if output_format == CLI__FORMAT__DOT:
            raise Invalid__Spec("--format dot is only available for dual graphs")
        if output_format == CLI__FORMAT__TEXT:
            return self.text(payload)
        return json_dumps(payload, sort_keys=True)

    def graph_text(self, graph: Dual__Graph) -> str:
        lines = [f"{len(graph.vertices)} vertices, {len(graph.edges)} edges, b1 = {graph.b1}"]
        lines.extend(f"  {label} ({kind.value})" for label, kind in graph.vertices)
        lines.extend(f"  {u} -- {v}" + (f" [{label}]" if label else '') for u, v, label in graph.edges)
        return '\n'.join(lines)

    def text(self, payload) -> str:
        if isinstance(payload, dict):
            return '\n'.join(f"{key}: {payload[key]}" for key in sorted(payload))
        if isinstance(payload, list):
            return '\n'.join(str(item) for item in payload)
        return str(payload)


def main():
    sys.exit(Toolkit__CLI().run(sys.argv[1:]))
