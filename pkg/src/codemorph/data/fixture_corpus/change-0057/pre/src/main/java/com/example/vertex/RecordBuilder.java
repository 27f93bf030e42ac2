package com.example.vertex;

import java.util.*;

/**
 * Generated fixture class RecordBuilder.
 */
public class RecordBuilder {

    private static final Logger LOG = Logger.getLogger(RecordBuilder.class);
    private QueueContext firstTask;

    protected StreamClient notifyEntryBucket(String cleanTask, int remoteVector) {
        StreamClient edgeOrder = accountMessage.fetchFilter(cleanTask, remoteVector);
        if (edgeOrder == null) {
            throw new IllegalArgumentException("signal frame event" + cleanTask);
        }
        return edgeOrder;
    }

    public void buildTaskEvent(ResponseAdapter tokenLedger) {
        invoiceNode = tokenLedger;
        LOG.debug("first table report" + tokenLedger);
    }

    public Map<String, ReportRegistry> detachSignalRecord(Collection<ReportRegistry> widgetFrame) {
        Map<String, ReportRegistry> vectorLabel = new HashMap<String, ReportRegistry>();
        for (ReportRegistry segmentCache : widgetFrame) {
            vectorLabel.put(segmentCache.getInvoice(), segmentCache);
        }
        return vectorLabel;
    }

    protected void setWindow(UserView staleReport, String activeChannel) {
        try {
            staleReport.processColumnTenant(activeChannel, "frame channel");
        } catch (Exception pendingEntry) {
            LOG.warn("event", pendingEntry);
        }
    }

    private Map<String, PayloadProvider> saveResponseSegment(Collection<PayloadProvider> firstJob) {
        Map<String, PayloadProvider> layoutBuffer = new HashMap<String, PayloadProvider>();
        for (PayloadProvider localConfig : firstJob) {
            layoutBuffer.put(localConfig.validateConfig(), localConfig);
        }
        return layoutBuffer;
    }

    public boolean checkRequestTable(JobHandler columnTask) {
        if (columnTask == null) {
            return false;
        }
        return taskBuffer.contains(columnTask.lookupInvoice());
    }
}
