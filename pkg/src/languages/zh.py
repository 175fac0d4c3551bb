"""
曲率界工具的中文语言资源
"""

TEXTS = {
    # 通用
    "error": "错误: {}",
    "warning": "警告: {}",
    "computing": "正在计算 {} 下界, K={}, N={}, D={}...",
    "output_written": "结果已写入 {}",

    # 命令行帮助
    "help_description": "CDD(K, N, D) 条件下的 Poincare、p-Poincare 与对数 Sobolev 精确下界",
    "help_commands": "要执行的子命令",
    "help_bound": "计算精确下界",
    "help_sweep": "沿 h 或 d 列出 lambda(h, d) 并检验单调性",
    "help_check_cd": "检验采样密度是否满足 CD(K, N)",
    "help_profile": "导出密度、特征函数、等周轮廓或上确界曲线",
    "help_language": "报告语言 (en/zh)",
    "help_format": "输出格式 (text/json/csv)",
    "help_output": "将结果写入文件而非标准输出",
    "help_config": "覆盖默认运行配置的 key = value 文件",
    "help_verbose": "启用调试日志",
    "help_version": "显示版本并退出",
    "help_quiet": "仅记录错误",
    "help_workers": "扫描使用的工作线程数",
    "help_inequality": "不等式: poincare、p-poincare 或 log-sobolev",
    "help_K": "曲率下界 K (实数)",
    "help_N": "有效维数 N (实数或 inf)",
    "help_D": "直径上界 D (正实数或 inf)",
    "help_p": "p-poincare 的指数 p > 1",
    "help_param": "扫描参数: h 或 d",
    "help_range": "扫描范围 a:b:n",
    "help_values": "逗号分隔的扫描取值",
    "help_values_file": "包含扫描取值的文件 (.txt 或 .csv)",
    "help_fixed_d": "扫描 h 时的区间长度 d",
    "help_fixed_h": "扫描 d 时的斜率 h",
    "help_density": "包含采样密度的两列 CSV (x, value)",
    "help_mode": "检验方式: diff (逐点微分) 或 midpoint (畸变平均)",
    "help_emit": "要导出的量",
    "help_h": "模型密度的斜率 h",
    "help_points": "密度与等周剖面导出的行数",
    "help_side": "Hardy 上确界的一侧: plus (中位数右侧) 或 minus",

    # 下界报告
    "bound_report_title": "精确下界报告",
    "inequality": "不等式",
    "parameters": "参数",
    "case_label": "情形",
    "method": "方法",
    "exactness": "精确性",
    "bound_value": "下界",
    "residual": "打靶残差",
    "iterations": "迭代次数",
    "note": "备注",
    "reference_title": "经典下界",
    "reference_row": "{} ({}): {:.6g}  [{}]",
    "no_reference": "没有适用的经典下界",
    "bg_bracket": "Bobkov-Goetze 区间: [{:.6g}, {:.6g}]",
    "exactness_exact": "精确",
    "exactness_up_to_constants": "在普适常数意义下等价",

    # 扫描报告
    "sweep_report_title": "单调性扫描",
    "swept_parameter": "扫描参数",
    "fixed_parameter": "固定参数",
    "regime": "预期方向",
    "verdict": "结论",
    "max_violation": "最大相对违例",
    "skipped_points": "跳过的点 ({} 个):",
    "skipped_row": "  {}: {}",
    "partial_sweep": "扫描不完整: {}/{} 个点位于正则区域之外",

    # CD 报告
    "cd_report_title": "曲率-维数检验",
    "cd_mode": "方式",
    "cd_passed": "通过",
    "cd_failed": "违反",
    "checked_points": "检验数",
    "tolerance": "容差",
    "violation_count": "违例数",
    "max_relative_gap": "最大相对差",
    "violation_location": "  x={:.6g}: {:.6g}",
    "midpoint_location": "  x0={:.6g}, x1={:.6g}, t={:.3f}: J(x_t)={:.6g} < M={:.6g}",

    # 导出
    "profile_rows": "{} 行 {}",

    # 错误信息
    "proviso_hint": "请选择 D < l_delta 或其他 (K, N)",
    "unsupported_hint": "模型测度约化不覆盖该范围",
    "range_format_error": "范围格式应为 a:b:n, 实际为 '{}'",
    "no_values": "未给出参数取值",
    "must_specify_one_input": "必须且只能指定 --range、--values 或 --values-file 之一",
    "file_not_found": "文件不存在: {}",
    "unsupported_file_format": "不支持的文件格式: {}",
    "missing_fixed_d": "扫描 h 时必须提供 --d",
    "missing_fixed_h": "扫描 d 时必须提供 --h",
    "emit_requires_finite_d": "--emit {} 需要有限直径",
}
