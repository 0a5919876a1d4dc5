from .sampling import sample_states, gen_overlap_training, overlap, STATE_KINDS
from .factory import overlap_task, state_prep_task, unitary_task
from .costs import CostEvaluator, cost_oe, cost_sp, cost_uc, task_cost
