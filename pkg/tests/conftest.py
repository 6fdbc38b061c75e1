from hypothesis import strategies as st

from ctqsched import TaskSet


def task_sets(max_n: int = 10, max_burst: int = 60):
    """Random FIFO queues: n in [1, max_n], bursts in [1, max_burst]."""
    return st.lists(
        st.integers(min_value=1, max_value=max_burst), min_size=1, max_size=max_n
    ).map(TaskSet.from_bursts)
