# Autogenerated by nbdev

d = { 'settings': { 'branch': 'main',
                'doc_baseurl': '/kleinspec',
                'doc_host': 'https://Karthik777.github.io',
                'git_url': 'https://github.com/Karthik777/kleinspec',
                'lib_path': 'kleinspec'},
  'syms': { 'kleinspec.checks': { 'kleinspec.checks.run_checks': ('checks.html#run_checks', 'kleinspec/checks.py')},
            'kleinspec.cli': { 'kleinspec.cli.Parser': ('cli.html#parser', 'kleinspec/cli.py'),
                              'kleinspec.cli.Parser.error': ('cli.html#parser.error', 'kleinspec/cli.py'),
                              'kleinspec.cli.cmd_classify': ('cli.html#cmd_classify', 'kleinspec/cli.py'),
                              'kleinspec.cli.cmd_find_p': ('cli.html#cmd_find_p', 'kleinspec/cli.py'),
                              'kleinspec.cli.cmd_integrate': ('cli.html#cmd_integrate', 'kleinspec/cli.py'),
                              'kleinspec.cli.cmd_periods': ('cli.html#cmd_periods', 'kleinspec/cli.py'),
                              'kleinspec.cli.cmd_spectrum': ('cli.html#cmd_spectrum', 'kleinspec/cli.py'),
                              'kleinspec.cli.cmd_verify': ('cli.html#cmd_verify', 'kleinspec/cli.py'),
                              'kleinspec.cli.main': ('cli.html#main', 'kleinspec/cli.py'),
                              'kleinspec.cli.parser': ('cli.html#parser', 'kleinspec/cli.py'),
                              'kleinspec.cli.validate': ('cli.html#validate', 'kleinspec/cli.py')},
            'kleinspec.core': { 'kleinspec.core.AccuracyError': ('core.html#accuracyerror', 'kleinspec/core.py'),
                              'kleinspec.core.ConstraintError': ('core.html#constrainterror', 'kleinspec/core.py'),
                              'kleinspec.core.DivergenceError': ('core.html#divergenceerror', 'kleinspec/core.py'),
                              'kleinspec.core.DomainError': ('core.html#domainerror', 'kleinspec/core.py'),
                              'kleinspec.core.IntegrationError': ('core.html#integrationerror', 'kleinspec/core.py'),
                              'kleinspec.core.IntegrationError.__init__': ('core.html#integrationerror.__init__', 'kleinspec/core.py'),
                              'kleinspec.core.OutOfRange': ('core.html#outofrange', 'kleinspec/core.py'),
                              'kleinspec.core.Params': ('core.html#params', 'kleinspec/core.py'),
                              'kleinspec.core.Params.K': ('core.html#params.k', 'kleinspec/core.py'),
                              'kleinspec.core.Params.__init__': ('core.html#params.__init__', 'kleinspec/core.py'),
                              'kleinspec.core.Params.is_circle': ('core.html#params.is_circle', 'kleinspec/core.py'),
                              'kleinspec.core.Params.is_decay': ('core.html#params.is_decay', 'kleinspec/core.py'),
                              'kleinspec.core.Params.is_hyperbola': ('core.html#params.is_hyperbola', 'kleinspec/core.py'),
                              'kleinspec.core.Params.p2': ('core.html#params.p2', 'kleinspec/core.py'),
                              'kleinspec.core.State': ('core.html#state', 'kleinspec/core.py'),
                              'kleinspec.core.State.vec': ('core.html#state.vec', 'kleinspec/core.py'),
                              'kleinspec.core.fmt_float': ('core.html#fmt_float', 'kleinspec/core.py'),
                              'kleinspec.core.n_workers': ('core.html#n_workers', 'kleinspec/core.py')},
            'kleinspec.dopri': { 'kleinspec.dopri.DenseSolution': ('dopri.html#densesolution', 'kleinspec/dopri.py'),
                              'kleinspec.dopri.DenseSolution.__call__': ('dopri.html#densesolution.__call__', 'kleinspec/dopri.py'),
                              'kleinspec.dopri.DenseSolution.__init__': ('dopri.html#densesolution.__init__', 'kleinspec/dopri.py'),
                              'kleinspec.dopri.dopri5': ('dopri.html#dopri5', 'kleinspec/dopri.py')},
            'kleinspec.elliptic': { 'kleinspec.elliptic.EllipticArgs': ('elliptic.html#ellipticargs', 'kleinspec/elliptic.py'),
                              'kleinspec.elliptic.EllipticArgs.__init__': ('elliptic.html#ellipticargs.__init__', 'kleinspec/elliptic.py'),
                              'kleinspec.elliptic.carlson_rc': ('elliptic.html#carlson_rc', 'kleinspec/elliptic.py'),
                              'kleinspec.elliptic.carlson_rf': ('elliptic.html#carlson_rf', 'kleinspec/elliptic.py'),
                              'kleinspec.elliptic.carlson_rj': ('elliptic.html#carlson_rj', 'kleinspec/elliptic.py'),
                              'kleinspec.elliptic.complete_elliptic': ('elliptic.html#complete_elliptic', 'kleinspec/elliptic.py'),
                              'kleinspec.elliptic.complete_elliptic_pi': ('elliptic.html#complete_elliptic_pi', 'kleinspec/elliptic.py'),
                              'kleinspec.elliptic.ellip_e': ('elliptic.html#ellip_e', 'kleinspec/elliptic.py'),
                              'kleinspec.elliptic.ellip_k': ('elliptic.html#ellip_k', 'kleinspec/elliptic.py'),
                              'kleinspec.elliptic.parameter': ('elliptic.html#parameter', 'kleinspec/elliptic.py'),
                              'kleinspec.elliptic.target_constant': ('elliptic.html#target_constant', 'kleinspec/elliptic.py')},
            'kleinspec.geometry': { 'kleinspec.geometry.IntervalData': ('geometry.html#intervaldata', 'kleinspec/geometry.py'),
                              'kleinspec.geometry.IntervalData.I1': ('geometry.html#intervaldata.i1', 'kleinspec/geometry.py'),
                              'kleinspec.geometry.IntervalData.I2': ('geometry.html#intervaldata.i2', 'kleinspec/geometry.py'),
                              'kleinspec.geometry.IntervalData.__init__': ('geometry.html#intervaldata.__init__', 'kleinspec/geometry.py'),
                              'kleinspec.geometry.IntervalData.disjoint': ('geometry.html#intervaldata.disjoint', 'kleinspec/geometry.py'),
                              'kleinspec.geometry.ParabolicState': ('geometry.html#parabolicstate', 'kleinspec/geometry.py'),
                              'kleinspec.geometry.QuadricValues': ('geometry.html#quadricvalues', 'kleinspec/geometry.py'),
                              'kleinspec.geometry.Trajectory.parabolic': ('geometry.html#trajectory.parabolic', 'kleinspec/geometry.py'),
                              'kleinspec.geometry.accel0': ('geometry.html#accel0', 'kleinspec/geometry.py'),
                              'kleinspec.geometry.critical_points': ('geometry.html#critical_points', 'kleinspec/geometry.py'),
                              'kleinspec.geometry.dpoly_P': ('geometry.html#dpoly_p', 'kleinspec/geometry.py'),
                              'kleinspec.geometry.from_parabolic': ('geometry.html#from_parabolic', 'kleinspec/geometry.py'),
                              'kleinspec.geometry.intervals': ('geometry.html#intervals', 'kleinspec/geometry.py'),
                              'kleinspec.geometry.line_factors': ('geometry.html#line_factors', 'kleinspec/geometry.py'),
                              'kleinspec.geometry.midpoint_shape': ('geometry.html#midpoint_shape', 'kleinspec/geometry.py'),
                              'kleinspec.geometry.parabolic_path': ('geometry.html#parabolic_path', 'kleinspec/geometry.py'),
                              'kleinspec.geometry.poly_P': ('geometry.html#poly_p', 'kleinspec/geometry.py'),
                              'kleinspec.geometry.poly_Q': ('geometry.html#poly_q', 'kleinspec/geometry.py'),
                              'kleinspec.geometry.quadrics': ('geometry.html#quadrics', 'kleinspec/geometry.py'),
                              'kleinspec.geometry.roots_P': ('geometry.html#roots_p', 'kleinspec/geometry.py'),
                              'kleinspec.geometry.to_parabolic': ('geometry.html#to_parabolic', 'kleinspec/geometry.py')},
            'kleinspec.odecore': { 'kleinspec.odecore.HamiltonianState': ('odecore.html#hamiltonianstate', 'kleinspec/odecore.py'),
                              'kleinspec.odecore.Period': ('odecore.html#period', 'kleinspec/odecore.py'),
                              'kleinspec.odecore.Period.__init__': ('odecore.html#period.__init__', 'kleinspec/odecore.py'),
                              'kleinspec.odecore.Period.doubled': ('odecore.html#period.doubled', 'kleinspec/odecore.py'),
                              'kleinspec.odecore.SolutionClass': ('odecore.html#solutionclass', 'kleinspec/odecore.py'),
                              'kleinspec.odecore.SolutionClass.__init__': ('odecore.html#solutionclass.__init__', 'kleinspec/odecore.py'),
                              'kleinspec.odecore.SolutionClass.__str__': ('odecore.html#solutionclass.__str__', 'kleinspec/odecore.py'),
                              'kleinspec.odecore.Trajectory': ('odecore.html#trajectory', 'kleinspec/odecore.py'),
                              'kleinspec.odecore.Trajectory.__call__': ('odecore.html#trajectory.__call__', 'kleinspec/odecore.py'),
                              'kleinspec.odecore.Trajectory.__init__': ('odecore.html#trajectory.__init__', 'kleinspec/odecore.py'),
                              'kleinspec.odecore.Trajectory.samples': ('odecore.html#trajectory.samples', 'kleinspec/odecore.py'),
                              'kleinspec.odecore.Trajectory.within_contract': ('odecore.html#trajectory.within_contract', 'kleinspec/odecore.py'),
                              'kleinspec.odecore.Trajectory.y_end': ('odecore.html#trajectory.y_end', 'kleinspec/odecore.py'),
                              'kleinspec.odecore.classify': ('odecore.html#classify', 'kleinspec/odecore.py'),
                              'kleinspec.odecore.decay_solution': ('odecore.html#decay_solution', 'kleinspec/odecore.py'),
                              'kleinspec.odecore.detect_period': ('odecore.html#detect_period', 'kleinspec/odecore.py'),
                              'kleinspec.odecore.first_integrals': ('odecore.html#first_integrals', 'kleinspec/odecore.py'),
                              'kleinspec.odecore.initial_state': ('odecore.html#initial_state', 'kleinspec/odecore.py'),
                              'kleinspec.odecore.integrate': ('odecore.html#integrate', 'kleinspec/odecore.py'),
                              'kleinspec.odecore.parity_defect': ('odecore.html#parity_defect', 'kleinspec/odecore.py'),
                              'kleinspec.odecore.potential': ('odecore.html#potential', 'kleinspec/odecore.py'),
                              'kleinspec.odecore.rhs': ('odecore.html#rhs', 'kleinspec/odecore.py'),
                              'kleinspec.odecore.sign_changes': ('odecore.html#sign_changes', 'kleinspec/odecore.py'),
                              'kleinspec.odecore.to_hamiltonian': ('odecore.html#to_hamiltonian', 'kleinspec/odecore.py')},
            'kleinspec.periods': { 'kleinspec.periods.PeriodData': ('periods.html#perioddata', 'kleinspec/periods.py'),
                              'kleinspec.periods.PeriodData.__init__': ('periods.html#perioddata.__init__', 'kleinspec/periods.py'),
                              'kleinspec.periods.PeriodData.ok': ('periods.html#perioddata.ok', 'kleinspec/periods.py'),
                              'kleinspec.periods.PeriodData.to_dict': ('periods.html#perioddata.to_dict', 'kleinspec/periods.py'),
                              'kleinspec.periods.RationalTarget': ('periods.html#rationaltarget', 'kleinspec/periods.py'),
                              'kleinspec.periods.RationalTarget.__init__': ('periods.html#rationaltarget.__init__', 'kleinspec/periods.py'),
                              'kleinspec.periods.RationalTarget.__str__': ('periods.html#rationaltarget.__str__', 'kleinspec/periods.py'),
                              'kleinspec.periods.RationalTarget.parse': ('periods.html#rationaltarget.parse', 'kleinspec/periods.py'),
                              'kleinspec.periods.RationalTarget.value': ('periods.html#rationaltarget.value', 'kleinspec/periods.py'),
                              'kleinspec.periods.asymptotic': ('periods.html#asymptotic', 'kleinspec/periods.py'),
                              'kleinspec.periods.find_p_for_ratio': ('periods.html#find_p_for_ratio', 'kleinspec/periods.py'),
                              'kleinspec.periods.moments': ('periods.html#moments', 'kleinspec/periods.py'),
                              'kleinspec.periods.period_u': ('periods.html#period_u', 'kleinspec/periods.py'),
                              'kleinspec.periods.period_v': ('periods.html#period_v', 'kleinspec/periods.py'),
                              'kleinspec.periods.ratio': ('periods.html#ratio', 'kleinspec/periods.py'),
                              'kleinspec.periods.ratio_range': ('periods.html#ratio_range', 'kleinspec/periods.py'),
                              'kleinspec.periods.tabulate': ('periods.html#tabulate', 'kleinspec/periods.py')},
            'kleinspec.report': { 'kleinspec.report.Report': ('report.html#report', 'kleinspec/report.py'),
                              'kleinspec.report.Report.__str__': ('report.html#report.__str__', 'kleinspec/report.py'),
                              'kleinspec.report.Report.check': ('report.html#report.check', 'kleinspec/report.py'),
                              'kleinspec.report.Report.checks': ('report.html#report.checks', 'kleinspec/report.py'),
                              'kleinspec.report.Report.counts': ('report.html#report.counts', 'kleinspec/report.py'),
                              'kleinspec.report.Report.load': ('report.html#report.load', 'kleinspec/report.py'),
                              'kleinspec.report.Report.meta': ('report.html#report.meta', 'kleinspec/report.py'),
                              'kleinspec.report.Report.passed': ('report.html#report.passed', 'kleinspec/report.py'),
                              'kleinspec.report.Report.save': ('report.html#report.save', 'kleinspec/report.py'),
                              'kleinspec.report.Report.table': ('report.html#report.table', 'kleinspec/report.py'),
                              'kleinspec.report.Report.to_dict': ('report.html#report.to_dict', 'kleinspec/report.py'),
                              'kleinspec.report.Svg': ('report.html#svg', 'kleinspec/report.py'),
                              'kleinspec.report.Svg.__init__': ('report.html#svg.__init__', 'kleinspec/report.py'),
                              'kleinspec.report.Svg.__str__': ('report.html#svg.__str__', 'kleinspec/report.py'),
                              'kleinspec.report.Svg.figure': ('report.html#svg.figure', 'kleinspec/report.py'),
                              'kleinspec.report.Svg.hline': ('report.html#svg.hline', 'kleinspec/report.py'),
                              'kleinspec.report.Svg.labels': ('report.html#svg.labels', 'kleinspec/report.py'),
                              'kleinspec.report.Svg.line': ('report.html#svg.line', 'kleinspec/report.py'),
                              'kleinspec.report.Svg.save': ('report.html#svg.save', 'kleinspec/report.py'),
                              'kleinspec.report.Svg.title': ('report.html#svg.title', 'kleinspec/report.py')},
            'kleinspec.spectral': { 'kleinspec.spectral.Eigenvalue': ('spectral.html#eigenvalue', 'kleinspec/spectral.py'),
                              'kleinspec.spectral.MetricProfile': ('spectral.html#metricprofile', 'kleinspec/spectral.py'),
                              'kleinspec.spectral.MetricProfile.__init__': ('spectral.html#metricprofile.__init__', 'kleinspec/spectral.py'),
                              'kleinspec.spectral.MetricProfile.area': ('spectral.html#metricprofile.area', 'kleinspec/spectral.py'),
                              'kleinspec.spectral.MetricProfile.conformal': ('spectral.html#metricprofile.conformal', 'kleinspec/spectral.py'),
                              'kleinspec.spectral.MetricProfile.general': ('spectral.html#metricprofile.general', 'kleinspec/spectral.py'),
                              'kleinspec.spectral.MetricProfile.scale': ('spectral.html#metricprofile.scale', 'kleinspec/spectral.py'),
                              'kleinspec.spectral.SpectralResult': ('spectral.html#spectralresult', 'kleinspec/spectral.py'),
                              'kleinspec.spectral.SpectralResult.__init__': ('spectral.html#spectralresult.__init__', 'kleinspec/spectral.py'),
                              'kleinspec.spectral.SpectralResult.to_dict': ('spectral.html#spectralresult.to_dict', 'kleinspec/spectral.py'),
                              'kleinspec.spectral.eigenspace': ('spectral.html#eigenspace', 'kleinspec/spectral.py'),
                              'kleinspec.spectral.fd_eigen': ('spectral.html#fd_eigen', 'kleinspec/spectral.py'),
                              'kleinspec.spectral.flat_profile': ('spectral.html#flat_profile', 'kleinspec/spectral.py'),
                              'kleinspec.spectral.g0_profile': ('spectral.html#g0_profile', 'kleinspec/spectral.py'),
                              'kleinspec.spectral.lambda1': ('spectral.html#lambda1', 'kleinspec/spectral.py'),
                              'kleinspec.spectral.nodal_count': ('spectral.html#nodal_count', 'kleinspec/spectral.py'),
                              'kleinspec.spectral.reconstructed_profile': ('spectral.html#reconstructed_profile', 'kleinspec/spectral.py'),
                              'kleinspec.spectral.sl_eigen': ('spectral.html#sl_eigen', 'kleinspec/spectral.py'),
                              'kleinspec.spectral.verify_conjecture': ('spectral.html#verify_conjecture', 'kleinspec/spectral.py')}}}
